#include "doctest.h"

#include <random>

#include "serrewt/algebra.hpp"
#include "serrewt/errors.hpp"

using namespace serrewt;

namespace {

Poly P(const std::string& s, const RingPtr& r, const std::map<std::string, Int>& k = {}) { return parse_poly(s, r, k); }

} // namespace

TEST_CASE("parser") {
    auto r = make_ring({"x", "y", "c11s"}, 13);
    CHECK(P("2x y^2 - (x + 1)(x - 1)", r) == P("2*x*y^2 - x^2 + 1", r));
    CHECK(P("c11s^-1 c11s", r) == Poly::constant(r, 1));
    CHECK(P("15", r) == Poly::constant(r, 2));
    CHECK(P("(a-b) x", r, {{"a", 9}, {"b", 4}}) == P("5x", r));
    CHECK_THROWS_AS(P("z", r), MissingVariable);
    CHECK_THROWS_AS(P("x +", r), SchemaError);
    CHECK_THROWS_AS(P("(x", r), SchemaError);
    CHECK(P("x^3 y - y", r).str() == "x^3*y - y");
}

TEST_CASE("membership and reduction basics") {
    auto r = make_ring({"c11", "c12s", "c21s", "c22"}, 13);
    IdealHandle g(r, {P("c11 c12s + c22", r)});
    CHECK(ideal_member(P("c11 c12s + c22", r), g));
    CHECK(reduce(Poly(r), g).is_zero());
    // p -> 0 collapse
    IdealHandle I(r, {P("c11 c22 + p c12s c21s", r, {{"p", 0}})});
    CHECK(ideal_member(P("c11 c22", r), I));
    CHECK_FALSE(ideal_member(P("c11", r), I));
    CHECK(IdealHandle(r, {P("c11", r), P("c11 + 1", r)}).is_unit());
}

TEST_CASE("sum, intersection, equality") {
    auto r = make_ring({"x", "y"}, 17);
    IdealHandle X(r, {P("x", r)}), Y(r, {P("y", r)});
    CHECK(ideal_equal(ideal_intersect(X, Y), IdealHandle(r, {P("x y", r)})));
    CHECK(ideal_equal(ideal_intersect(X, X), X));
    IdealHandle S = ideal_sum(X, Y);
    CHECK(ideal_contains(S, X));
    CHECK(ideal_contains(X, ideal_intersect(X, Y)));
    CHECK_FALSE(ideal_contains(X, Y));
    IdealHandle J(r, {P("x^2 - y", r)}), K(r, {P("x y - 1", r)});
    auto JK = ideal_intersect(J, K);
    for (auto& g : JK.gb()) {
        CHECK(ideal_member(g, J));
        CHECK(ideal_member(g, K));
    }
    CHECK(ideal_member(P("(x^2 - y)(x y - 1)", r), JK));
}

TEST_CASE("saturation removes unit factors") {
    auto r = make_ring({"x", "u"}, 11);
    IdealHandle I(r, {P("x u^2", r), P("x^2 u", r)});
    CHECK(ideal_equal(ideal_saturate(I, P("u", r)), IdealHandle(r, {P("x", r)})));
    IdealHandle J(r, {P("x - 1", r)});
    CHECK(ideal_saturate(J, P("x", r)).gb().size() == 1);
    CHECK(ideal_saturate(IdealHandle(r, {P("x u", r)}), P("x u", r)).is_unit());
}

TEST_CASE("intersection of monomial ideals matches the lcm oracle") {
    std::mt19937_64 rng(5);
    auto r = make_ring({"x", "y", "z", "w"}, 13);
    std::uniform_int_distribution<int> e(0, 3), n(1, 3);
    auto random_mono = [&] {
        Monomial m(4);
        for (auto& x : m) x = e(rng);
        return m;
    };
    for (int t = 0; t < 50; ++t) {
        std::vector<Monomial> A, B;
        for (int i = n(rng); i > 0; --i) A.push_back(random_mono());
        for (int i = n(rng); i > 0; --i) B.push_back(random_mono());
        std::vector<Poly> ga, gb, gl;
        for (auto& a : A) ga.push_back(Poly::term(r, a, 1));
        for (auto& b : B) gb.push_back(Poly::term(r, b, 1));
        for (auto& a : A)
            for (auto& b : B) gl.push_back(Poly::term(r, lcm(a, b), 1));
        CHECK(ideal_equal(ideal_intersect(IdealHandle(r, ga), IdealHandle(r, gb)), IdealHandle(r, gl)));
    }
}

TEST_CASE("Groebner bases are closed under S-polynomials") {
    std::mt19937_64 rng(11);
    auto r = make_ring({"a1", "a2", "a3", "a4"}, 17);
    std::uniform_int_distribution<int> e(0, 2), c(0, 16), n(2, 4);
    for (int t = 0; t < 30; ++t) {
        std::vector<Poly> gens;
        for (int g = n(rng); g > 0; --g) {
            Poly f(r);
            for (int k = 0; k < 3; ++k) f.add_term({e(rng), e(rng), e(rng), e(rng)}, c(rng));
            gens.push_back(f);
        }
        IdealHandle I(r, gens);
        auto& G = I.gb();
        CHECK(buchberger_closed(G));
        for (auto& g : gens) CHECK(ideal_member(g, I));
        for (auto& g : G) CHECK(g.is_zero() == false);
    }
    auto rows = make_ring({"c11", "c22", "c33"}, 13);
    CHECK_THROWS_AS(groebner(rows, {P("c11^-1", rows)}), DecompositionError);
}

TEST_CASE("structure constants") {
    StructureConstants sc{9, 4, 0, 13};
    CHECK(sc.genericity() == 4);
    auto s1 = sc.shifted(1);
    CHECK(s1.a == 4);
    CHECK(s1.b == 0);
    CHECK(s1.c == 10);
    CHECK(sc.shifted(3).a == 10); // three shifts add 1 to each
    CHECK(sc.constants().at("e") == 12);
    std::mt19937_64 rng(2);
    for (Int p : {11, 13, 17}) {
        for (int t = 0; t < 20; ++t) {
            auto g = random_generic_sc(p, rng);
            CHECK(sc_in_envelope(g));
            CHECK(g.genericity() >= std::min<Int>(5, (p - 1) / 3));
        }
    }
    CHECK_THROWS_AS(random_generic_sc(3, rng), DepthError);
}

TEST_CASE("table rings") {
    StructureConstants sc{12, 6, 0, 17};
    auto free = table_ring("abag", sc);
    CHECK(free.ideal.is_zero());
    CHECK(free.units.size() == 3);
    auto aba = table_ring("aba", sc);
    auto k = sc.constants();
    CHECK(ideal_member(P("c11 ((a-b) c23 c32 - (a-c) c22s d33)", aba.ring, k), aba.ideal));
    auto bag = table_ring("bag", sc);
    CHECK(ideal_member(P("c11 c22", bag.ring), bag.ideal));
    CHECK_THROWS_AS(table_ring("abc", sc), UnknownRow);
    auto shifted = table_ring("bag", sc, 1);
    CHECK(ideal_member(P("c22 c33", shifted.ring), shifted.ideal));
}

TEST_CASE("component ideals") {
    StructureConstants sc{12, 6, 0, 17};
    auto k = sc.constants();
    auto c00 = component_generators("aba", "0,0", sc);
    CHECK(ideal_equal(c00, IdealHandle(c00.ring(), {P("c11", c00.ring())})));
    auto c01 = component_generators("aba", "0,1", sc);
    CHECK(ideal_equal(c01, IdealHandle(c01.ring(), {P("(a-b) c23 c32 - (a-c) c22s d33", c01.ring(), k)})));
    auto e10 = component_generators("id", "e1,0", sc);
    CHECK(ideal_equal(e10, IdealHandle(e10.ring(), {P("c11", e10.ring()), P("c22", e10.ring()), P("c33", e10.ring()),
                                                    P("c21", e10.ring()), P("c31", e10.ring()),
                                                    P("c23", e10.ring())})));
    CHECK_THROWS_AS(component_generators("aba", "e1,1", sc), UnlistedComponent);
    // every component contains the row ideal
    for (auto& row : component_rows()) {
        auto tr = table_ring(row, sc);
        for (auto& l : component_labels(row)) CHECK(ideal_contains(component_ideal(row, l, sc), tr.ideal));
    }
}

TEST_CASE("component counts are never three") {
    std::map<std::string, size_t> expect{{"abag", 1}, {"bgag", 1}, {"bag", 2}, {"abg", 2}, {"aba", 2},
                                         {"ab", 4},   {"ba", 4},   {"a", 6},   {"id", 6}};
    for (auto& row : component_rows()) {
        CHECK(component_labels(row).size() == expect.at(row));
        CHECK(component_labels(row).size() != 3);
    }
}

TEST_CASE("component tables verify for every row and shift") {
    std::mt19937_64 rng(3);
    for (Int p : {11, 13, 17}) {
        auto sc = random_generic_sc(p, rng);
        for (auto& row : component_rows())
            for (int shift = 0; shift < 3; ++shift) {
                auto rep = verify_components(row, sc, shift);
                INFO(row << " shift " << shift << " " << sc.str());
                CHECK(rep.ok());
            }
    }
    // the two-component intersections by hand
    StructureConstants sc{12, 6, 0, 17};
    auto bag = table_ring("bag", sc);
    auto meet = ideal_intersect(component_ideal("bag", "e1+e2,0", sc), component_ideal("bag", "e2,1", sc));
    CHECK(ideal_equal(meet, saturate_units(bag, bag.ideal)));
    CHECK(ideal_member(P("c11 c22", bag.ring), meet));
}

TEST_CASE("a wrong component list is rejected") {
    StructureConstants sc{12, 6, 0, 17};
    // the row ideal with one component dropped is strictly smaller than the intersection
    auto tr = table_ring("ab", sc);
    std::vector<IdealHandle> comps;
    auto labels = component_labels("ab");
    for (size_t i = 1; i < labels.size(); ++i) comps.push_back(component_ideal("ab", labels[i], sc));
    CHECK_FALSE(ideal_equal(ideal_intersect(comps), saturate_units(tr, tr.ideal)));
}

TEST_CASE("ideal lemmas") {
    CHECK(verify_lemma(1, {9, 4, 0, 13}));
    CHECK(verify_lemma(2, {12, 6, 0, 17}));
    std::mt19937_64 rng(7);
    for (Int p : {11, 13, 17})
        for (int k = 1; k <= 4; ++k) {
            auto sc = random_generic_sc(p, rng);
            INFO("lemma " << k << " " << sc.str());
            CHECK(verify_lemma(k, sc));
        }
    CHECK(lemma_identities().size() == 6);
    CHECK_THROWS_AS(verify_lemma(5, {12, 6, 0, 17}), UnknownRow);
}

TEST_CASE("mutating a right-hand side flips the verdict") {
    StructureConstants sc{12, 6, 0, 17};
    for (int k = 1; k <= 4; ++k) {
        auto m = mutation_test(k, sc);
        INFO("lemma " << k);
        CHECK(m.tried > 0);
        CHECK(m.flipped == m.tried - m.unchanged_ideal);
        CHECK(m.flipped > 0);
    }
    Mutation m{1, 3, 0};
    CHECK_FALSE(verify_identity(lemma_identities()[0], sc, &m));
}

TEST_CASE("regression records round trip") {
    RegressionRecord r{"id", 17, 12, 6, 0, "lemma1", true, 17};
    auto line = to_line(r);
    CHECK(line == R"({"row":"id","p":17,"a":12,"b":6,"c":0,"check":"lemma1","verdict":true,"gb_size":17})");
    auto back = from_line(line);
    CHECK(back.row == r.row);
    CHECK(back.gb_size == r.gb_size);
    CHECK(back.verdict);
    CHECK_THROWS_AS(from_line("{\"row\":1}"), SchemaError);
    CHECK_THROWS_AS(from_line("not json"), SchemaError);
}
