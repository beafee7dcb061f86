#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "serrewt/classify.hpp"
#include "serrewt/errors.hpp"

using namespace serrewt;

namespace {

Vec3 from_pairings(Int a, Int b) { return {a + b - 2, b - 1, 0}; }

Vec3 random_deep(std::mt19937_64& rng, Int p, int n) {
    std::uniform_int_distribution<Int> d(n + 1, p - n - 2);
    while (true) {
        Int a = d(rng), b = d(rng);
        if (a + b < p - n) return from_pairings(a, b) + Int(rng() % 5) * kOne;
    }
}

SigmaTemplate literal(const CaseDescriptor& cd, const std::vector<WeightPresentation>& ws) {
    std::set<GraphCoord> out;
    for (const auto& w : ws) out.insert(unplace(cd, w)[0]);
    return {out.begin(), out.end()};
}

// x = t_{mu+eta} u with mu central in a wide alcove
AffElt deep_point(Int p, const Perm& u) { return AffElt{from_pairings(p / 3, p / 3) + kEta, u}; }

} // namespace

TEST_CASE("tilde_sw") {
    for (const auto& w : restricted_reps())
        for (int s : {0, 1}) {
            Perm sp = s ? perm_s2() : perm_s1();
            AffElt t = tilde_sw(w, s);
            CHECK(t.w == sp * w.w);
            CHECK(is_restricted(t));
            CHECK(tilde_sw(t, s) == w);
            // exactly one class modulo X^0 in a radius-2 window
            std::set<Vec3> classes;
            for (Int a = -2; a <= 2; ++a)
                for (Int b = -2; b <= 2; ++b)
                    for (Int c = -2; c <= 2; ++c)
                        for (const auto& u : Perm::all()) {
                            AffElt x{{a, b, c}, u};
                            if (!is_restricted(x)) continue;
                            if (!(x * w.inverse() * AffElt::finite(sp).inverse()).w.is_identity()) continue;
                            classes.insert(lambda_w(x.nu));
                        }
            CHECK(classes.size() == 1);
            CHECK(classes.count(lambda_w(t.nu)) == 1);
        }
}

TEST_CASE("specialization pairs of a torus fixed point") {
    const Int p = 31;
    for (const auto& u : Perm::all()) {
        ProductElt x{deep_point(p, u)};
        auto sps = sp_fixed(x, p);
        CHECK(sps.size() == 6);
        CHECK(specializations(sps) == std::vector<ProductElt>{x});
        auto wg = wg_fixed(x, p);
        std::set<WeightPresentation> wgs(wg.begin(), wg.end());
        std::set<std::vector<Perm>> thetas;
        for (const auto& sp : sps) {
            CHECK(wgs.count(canonical(sp.weight)) == 1);
            thetas.insert(theta(sp));
            CHECK(theta(sp) == std::vector<Perm>{(x[0] * sp.weight.w1[0].inverse()).w});
        }
        CHECK(thetas.size() == 6);
    }
    // f = 2: 6^f pairs
    ProductElt x2{deep_point(p, perm_s1()), deep_point(p, perm_w0())};
    CHECK(sp_fixed(x2, p).size() == 36);
    // near the boundary some candidates drop out
    ProductElt edge{AffElt{from_pairings(3, 3) + kEta, Perm{}}};
    CHECK(sp_fixed(edge, p).size() < 6);
}

TEST_CASE("wg_fixed agrees with the up-linkage enumeration") {
    std::mt19937_64 rng(21);
    for (auto [p, f] : {std::pair<Int, int>{31, 1}, {37, 2}}) {
        for (int it = 0; it < 50; ++it) {
            ProductElt x;
            for (int j = 0; j < f; ++j) x.push_back(AffElt{random_deep(rng, p, 6) + kEta, Perm::from_index(int(rng() % 6))});
            auto a = wg_fixed(x, p);
            CHECK(a == wg_fixed_oracle(x, p));
            CHECK(a.size() == (f == 1 ? 9u : 81u));
        }
    }
    ProductElt shallow{AffElt{from_pairings(1, 2) + kEta, Perm{}}};
    CHECK_THROWS_AS(wg_fixed(shallow, 31), DepthError);
}

TEST_CASE("simple walk branches") {
    const Int p = 31;
    ProductElt x{deep_point(p, perm_s2())};
    const auto seed = sp_fixed(x, p)[2];
    for (int s : {0, 1}) {
        Perm sp = s ? perm_s2() : perm_s1();
        auto a = simple_walk(seed, 0, s, constant_oracle(Branch::new_specialization));
        CHECK(a.y[0] == seed.y[0] * seed.weight.w1[0].inverse() * AffElt::finite(sp) * seed.weight.w1[0]);
        CHECK(equivalent(a.weight, seed.weight));
        CHECK(theta(a)[0] == theta(seed)[0] * sp);

        auto b = simple_walk(seed, 0, s, constant_oracle(Branch::new_weight));
        CHECK(b.y == seed.y);
        CHECK(b.weight.w1[0] == tilde_sw(seed.weight.w1[0], s));
        CHECK(b.weight.omega[0] == (b.y[0] * b.weight.w1[0].inverse())(Vec3{0, 0, 0}));
        CHECK(theta(b)[0] == theta(seed)[0] * sp);
        CHECK(zeta_of(b.weight) == zeta_of(seed.weight));
    }
    SpecPair shallow = make_pair({AffElt{from_pairings(3, 3) + kEta, Perm{}}}, {restricted_reps()[0]}, p);
    CHECK_THROWS_AS(simple_walk(shallow, 0, 0, constant_oracle(Branch::new_weight)), DepthError);
}

TEST_CASE("closures over every edge oracle") {
    const Int p = 31;
    std::map<int, int> by_case;
    int consistent = 0, inconsistent = 0, mirrored = 0;
    for (const auto& u : Perm::all()) {
        ProductElt x{deep_point(p, u)};
        for (const auto& seed : sp_fixed(x, p)) {
            for (unsigned mask = 0; mask < 64; ++mask) {
                std::vector<SpecPair> sps;
                try {
                    sps = close_sp(seed, edge_oracle({mask}));
                } catch (const ConsistencyError&) {
                    ++inconsistent;
                    continue;
                }
                ++consistent;
                REQUIRE(sps.size() == 6);
                std::set<std::vector<Perm>> th;
                for (const auto& sp : sps) th.insert(theta(sp));
                CHECK(th.size() == 6);

                auto cd = classify_case(sps);
                int k = cd.case_id[0];
                ++by_case[k];
                mirrored += cd.mirrored[0];
                CHECK(literal(cd, obvious_weights(sps)) == case_obv(k));
                auto ub = wg_upper_bound(sps);
                CHECK(literal(cd, ub) == case_obv_bound(k));

                std::set<WeightPresentation> ubs(ub.begin(), ub.end());
                for (bool upper : {false, true}) {
                    if (upper && k != 1) continue;
                    cd.sub_variant[0] = upper;
                    auto wg = wg_from_case(cd);
                    std::set<WeightPresentation> wgs(wg.begin(), wg.end());
                    for (const auto& w : obvious_weights(sps)) CHECK(wgs.count(w) == 1);
                    for (const auto& w : wg) CHECK(ubs.count(w) == 1);
                    CHECK(literal(cd, wg) == case_geometric(k, upper));
                }
                if (k >= 3) CHECK(sigma_g_from_bounds(case_obv(k), case_obv_bound(k)) == case_geometric(k));

                size_t ns = specializations(sps).size();
                const std::map<int, size_t> spec_count{{1, 6}, {2, 6}, {3, 4}, {4, 2}, {5, 2}, {6, 1}};
                CHECK(ns == spec_count.at(k));
            }
        }
    }
    CHECK(consistent == 6 * 48);
    CHECK(inconsistent == 6 * 336);
    CHECK(by_case.size() == 6);
    for (int k = 1; k <= 6; ++k) CHECK(by_case[k] > 0);
    // the case-3 sets come in both chiralities
    CHECK(mirrored == by_case[3] / 2);
}

TEST_CASE("named oracles") {
    const Int p = 31;
    ProductElt x{deep_point(p, Perm{})};
    auto seeds = sp_fixed(x, p);
    for (const auto& seed : seeds) {
        bool upper = alcove_digit(seed.weight.w1[0]) == 1;
        auto a = close_sp(seed, constant_oracle(Branch::new_specialization));
        CHECK(specializations(a).size() == 6);
        CHECK(obvious_weights(a).size() == 1);
        CHECK(classify_case(a).case_id[0] == (upper ? 2 : 1));

        auto b = close_sp(seed, constant_oracle(Branch::new_weight));
        CHECK(specializations(b) == std::vector<ProductElt>{x});
        CHECK(obvious_weights(b).size() == 6);
        CHECK(classify_case(b).case_id[0] == 6);
    }
    // an oracle depending on more than the edge is caught
    int calls = 0;
    BranchOracle flaky = [&calls](const SpecPair&, size_t, int) {
        return (calls++ % 3) ? Branch::new_weight : Branch::new_specialization;
    };
    CHECK_THROWS_AS(close_sp(seeds[0], flaky), ConsistencyError);
}

TEST_CASE("classification of literal sets") {
    const Int p = 31;
    // place each literal list in a random position and read it back
    std::mt19937_64 rng(5);
    for (int k = 1; k <= 6; ++k)
        for (int it = 0; it < 40; ++it) {
            CaseDescriptor cd;
            cd.case_id = {k};
            cd.w = {Perm::from_index(int(rng() % 6))};
            cd.lam = {lambda_w(from_pairings(10, 10) + Vec3{Int(rng() % 5) - 2, Int(rng() % 5) - 2, 0})};
            cd.mirrored = {bool(rng() % 2)};
            cd.sub_variant = {false};
            cd.zeta = {Int(rng() % 9) - 4};
            cd.p = p;
            std::vector<SpecPair> sps;
            for (const auto& g : case_obv(k)) {
                auto w = place(cd, {g});
                // any specialization realizing the weight will do for classification
                ProductElt y{AffElt::translation(w.omega[0]) * w.w1[0]};
                sps.push_back(SpecPair{y, w});
            }
            auto got = classify_case(sps);
            CHECK(got.case_id[0] == k);
            CHECK(literal(got, obvious_weights(sps)) == case_obv(k));
        }
    std::vector<SpecPair> junk;
    for (const auto& g : SigmaTemplate{{{0, 0, 0}, 0}, {{3, 0, 0}, 0}}) {
        CaseDescriptor cd{{1}, {Perm{}}, {{20, 10, 0}}, {false}, {false}, {0}, p};
        auto w = place(cd, {g});
        junk.push_back(SpecPair{{AffElt::translation(w.omega[0]) * w.w1[0]}, w});
    }
    CHECK_THROWS_AS(classify_case(junk), ClassificationError);
}

TEST_CASE("never three") {
    for (int k = 1; k <= 6; ++k)
        for (bool upper : {false, true}) {
            const auto& sg = case_geometric(k, upper);
            for (const auto& w : Perm::all())
                for (int sign : {1, -1})
                    for (Int a = -2; a <= 2; ++a)
                        for (Int b = -2; b <= 2; ++b) {
                            SigmaTemplate moved;
                            for (const auto& g : sg) moved.push_back({lambda_w(Vec3{a, b, 0} + sign * w(g.eps)), g.digit});
                            CHECK(never_three(moved));
                        }
        }
    // the obvious lists of cases 5 and 6 are not closed: some translate meets them in three
    CHECK_FALSE(never_three(case_obv(5)));
    CHECK_FALSE(never_three(case_obv(6)));
    CHECK(sigma0_translates(4).size() > 0);
}

TEST_CASE("geometric weights from bounds") {
    for (int k = 1; k <= 6; ++k) CHECK(sigma_g_from_bounds(case_obv(k), case_obv(k)) == case_obv(k));
    for (int k = 3; k <= 6; ++k) CHECK(sigma_g_from_bounds(case_obv(k), case_obv_bound(k)) == case_geometric(k));
    CHECK(sigma_g_from_bounds(case_obv(2), case_obv_bound(2)) == case_geometric(2));
    // case 1 has no discriminating translate
    CHECK_THROWS_AS(sigma_g_from_bounds(case_obv(1), case_obv_bound(1)), ClassificationError);
    CHECK_THROWS_AS(sigma_g_from_bounds(case_obv_bound(3), case_obv(3)), std::invalid_argument);
}

TEST_CASE("wg_from_case sizes") {
    const std::map<int, size_t> sizes{{1, 1}, {2, 1}, {3, 2}, {4, 3}, {5, 6}, {6, 9}};
    for (auto [k, n] : sizes) {
        CaseDescriptor cd{{k, k}, {Perm{}, perm_s1()}, {{20, 10, 0}, {21, 9, 0}}, {false, false}, {false, false},
                          {0, 1}, 61};
        CHECK(wg_from_case(cd).size() == n * n);
        CHECK_FALSE(wg_exact(cd));
        cd.genericity = 8;
        CHECK(wg_exact(cd));
    }
    CaseDescriptor one{{1}, {Perm{}}, {{20, 10, 0}}, {false}, {true}, {0}, 61};
    CHECK(wg_from_case(one).size() == 2);
}

TEST_CASE("closures of products") {
    const Int p = 37;
    std::mt19937_64 rng(8);
    ProductElt x{deep_point(p, perm_s1()), deep_point(p, perm_cyc())};
    auto seeds = sp_fixed(x, p);
    int done = 0;
    for (int it = 0; it < 200 && done < 30; ++it) {
        std::vector<unsigned> masks{unsigned(rng() % 64), unsigned(rng() % 64)};
        const auto& seed = seeds[rng() % seeds.size()];
        std::vector<SpecPair> sps;
        try {
            sps = close_sp(seed, edge_oracle(masks));
        } catch (const ConsistencyError&) {
            continue;
        }
        ++done;
        CHECK(sps.size() == 36);
        auto cd = classify_case(sps);
        // the closure is the product of the single-embedding closures
        size_t expect = 1;
        for (size_t j = 0; j < 2; ++j) {
            SpecPair sj = make_pair({seed.y[j]}, {seed.weight.w1[j]}, p);
            auto one = close_sp(sj, edge_oracle({masks[j]}));
            CHECK(classify_case(one).case_id[0] == cd.case_id[j]);
            expect *= obvious_weights(one).size();
        }
        CHECK(obvious_weights(sps).size() == expect);
    }
    CHECK(done > 0);
}

TEST_CASE("genericity of specializations") {
    CHECK(spec_genericity(8) == 4);
    CHECK(spec_genericity(6) == 2);
    CHECK(spec_genericity(11) == 7);
    CHECK_THROWS_AS(spec_genericity(5), DepthError);
}
