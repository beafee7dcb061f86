#include "doctest.h"

#include <random>
#include <set>

#include "serrewt/alcove.hpp"
#include "serrewt/errors.hpp"

using namespace serrewt;

namespace {

Vec3 from_pairings(Int a, Int b) { return {a + b - 2, b - 1, 0}; } // <mu+eta, .> = a, b on simple roots

Vec3 random_deep(std::mt19937_64& rng, Int p, int n) {
    std::uniform_int_distribution<Int> d(n + 1, p - n - 2);
    while (true) {
        Int a = d(rng), b = d(rng);
        if (a + b < p - n) return from_pairings(a, b) + Int(rng() % 5) * kOne;
    }
}

Vec3 random_eps(std::mt19937_64& rng, int r) {
    std::uniform_int_distribution<Int> d(-r, r);
    return {d(rng), d(rng), 0};
}

WeightPresentation base_presentation(const Vec3& omega, int digit, Int cls, Int p) {
    return WeightPresentation{{restricted_element(digit, cls)}, {omega}, p};
}

} // namespace

TEST_CASE("depth") {
    CHECK(depth(from_pairings(5, 6), 17) == 4);
    CHECK(depth(-kEta, 17) == -1);
    CHECK(depth(Vec3{0, 0, 0}, 17) == 0);
    CHECK(depth(Vec3{40, 0, 0}, 17) == -1);
    std::mt19937_64 rng(1);
    for (int it = 0; it < 500; ++it) {
        Vec3 mu = random_deep(rng, 23, 0);
        Int k = Int(rng() % 11) - 5;
        CHECK(depth(mu + Vec3{k, k, k}, 23) == depth(mu, 23));
        CHECK(alcove_depth(mu, 23) == depth(mu, 23));
        // the N-deep gates are the defining inequalities
        for (int n = 0; n <= 8; ++n) {
            bool deep = true;
            for (const auto& a : kPosRoots) {
                Int k = dot(mu + kEta, a);
                deep = deep && n < k && k < 23 - n;
            }
            CHECK((depth(mu, 23) >= n) == deep);
        }
    }
}

TEST_CASE("restricted representatives") {
    const auto& reps = restricted_reps();
    std::set<Perm> fins;
    for (int i = 0; i < 6; ++i) {
        fins.insert(reps[i].w);
        CHECK(alcove_digit(reps[i]) == (i >= 3));
        CHECK(omega_component(reps[i]) == (i % 3) - (i >= 3 ? 3 : 0));
    }
    CHECK(fins.size() == 6);
    for (Int cls = -7; cls <= 7; ++cls)
        for (int a : {0, 1}) {
            AffElt x = restricted_element(a, cls);
            CHECK(omega_component(x) == cls);
            CHECK(alcove_digit(x) == a);
        }
    CHECK_FALSE(is_restricted(gen_alpha()));
    CHECK_THROWS_AS(alcove_digit(gen_alpha()), CompatibilityError);
}

TEST_CASE("equivalence relation") {
    WeightPresentation x = base_presentation({7, 3, 2}, 1, 4, 17);
    WeightPresentation y = x;
    y.w1[0] = t_one() * y.w1[0];
    y.omega[0] = y.omega[0] - kOne;
    CHECK(equivalent(x, y));
    WeightPresentation z = x;
    z.omega[0] = z.omega[0] + kEps1;
    CHECK_FALSE(equivalent(x, z));
    CHECK(canonical(canonical(x)) == canonical(x));
    CHECK(canonical(x).omega[0][2] == 0);
    CHECK(zeta_of(x) == zeta_of(y));
}

TEST_CASE("graph coordinate examples") {
    const Int p = 17;
    std::vector<Vec3> lam{Vec3{10, 5, 0}};
    Int deg = total_degree(lam[0]);
    auto lower = base_presentation(lam[0], 0, 0, p);
    CHECK(to_graph(lower, lam) == GraphPoint{{{0, 0, 0}, 0}});
    auto upper = base_presentation(lam[0], 1, 0, p);
    CHECK(to_graph(upper, lam) == GraphPoint{{{0, 0, 0}, 1}});
    CHECK(upper.w1[0] == t_one() * w_h());

    // (eps_1, 0) over lam = eta
    std::vector<Vec3> eta{kEta};
    auto w = from_graph({{kEps1, 0}}, eta, zeta_of_lambda(eta), p);
    CHECK(w.omega[0] == kEta + kEps1);
    CHECK(w.w1[0] == AffElt::translation({-1, -1, -1}) * omega_gen() * omega_gen());
    CHECK(zeta_of(w) == std::vector<Int>{0});

    CHECK(zeta_of(base_presentation(kEta, 0, 0, p)) == std::vector<Int>{0});
    auto bad = base_presentation(lam[0], 0, 1, p);
    CHECK_THROWS_AS(to_graph(bad, lam), CompatibilityError);
    CHECK_THROWS_AS(from_graph({{{12, 0, 0}, 0}}, lam, {deg - 3}, p), DepthError);
}

TEST_CASE("to_graph and from_graph are mutually inverse") {
    for (auto [p, f] : {std::pair<Int, int>{11, 1}, {13, 2}, {17, 3}}) {
        std::mt19937_64 rng(p * 10 + f);
        int done = 0, tries = 0;
        while (done < 500) {
            REQUIRE(++tries < 100000);
            std::vector<Vec3> lam;
            GraphPoint g;
            for (int j = 0; j < f; ++j) {
                lam.push_back(random_deep(rng, p, 0) + kEta);
                g.push_back({random_eps(rng, 2), int(rng() % 2)});
            }
            WeightPresentation w;
            try {
                w = from_graph(g, lam, zeta_of_lambda(lam), p);
            } catch (const DepthError&) {
                continue;
            }
            CHECK(to_graph(w, lam) == g);
            for (const auto& om : w.omega) CHECK(depth(om - kEta, p) >= 0);

            // and from the presentation side, starting from a non-canonical representative
            WeightPresentation v = w;
            for (int j = 0; j < f; ++j) {
                Int k = Int(rng() % 9) - 4;
                v.w1[j] = AffElt::translation({k, k, k}) * v.w1[j];
                v.omega[j] = v.omega[j] - Vec3{k, k, k};
            }
            CHECK(from_graph(to_graph(v, lam), lam, zeta_of(v), p) == canonical(v));
            CHECK(zeta_of(v) == zeta_of(w));
            ++done;
        }
    }
}

TEST_CASE("graph action is a group action") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Int> d(-4, 4);
    auto rand_elt = [&] { return AffElt{{d(rng), d(rng), d(rng)}, Perm::from_index(int(rng() % 6))}; };
    for (int it = 0; it < 1000; ++it) {
        AffElt x = rand_elt(), y = rand_elt();
        GraphCoord g{random_eps(rng, 3), int(rng() % 2)};
        CHECK(graph_act(x * y, g) == graph_act(x, graph_act(y, g)));
        CHECK(graph_act(AffElt{}, g) == g);
        CHECK(graph_act(AffElt::translation(x.nu), g) == GraphCoord{lambda_w(g.eps + x.nu), g.digit});
        // translations act freely modulo X^0
        CHECK((graph_act(AffElt::translation(x.nu), g) == g) == (x.nu[0] == x.nu[1] && x.nu[1] == x.nu[2]));
        CHECK(graph_act_geometric(x * y, g) == graph_act_geometric(x, graph_act_geometric(y, g)));
    }
}

TEST_CASE("restricted alcoves tile the plane") {
    // every barycenter of a radius-3 window is located in exactly one (eps, digit)
    std::set<GraphCoord> hit;
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= 3; ++b)
            for (int dg : {0, 1}) {
                GraphCoord g{{a, b, 0}, dg};
                CHECK(locate_alcove(barycenter3(g)) == g);
                CHECK(hit.insert(g).second);
            }
    // every lattice point of (1/3)Z^3 off the walls is a barycenter of the alcove it is located in
    int off_wall = 0;
    for (Int x = -9; x <= 9; ++x)
        for (Int y = -9; y <= 9; ++y) {
            Vec3 pt{x, y, 0};
            GraphCoord g;
            try {
                g = locate_alcove(pt);
            } catch (const std::invalid_argument&) {
                continue;
            }
            ++off_wall;
            Vec3 diff = pt - barycenter3(g);
            CHECK((diff[0] == diff[1] && diff[1] == diff[2]));
        }
    CHECK(off_wall > 0);
}

TEST_CASE("Serre weight highest weights") {
    const Int p = 17;
    Vec3 mu = from_pairings(5, 6);
    auto w = base_presentation(mu + kEta, 0, 0, p);
    CHECK(serre_highest_weight(w) == canonical_highest_weight({mu}, p));

    std::mt19937_64 rng(4);
    for (auto [q, f] : {std::pair<Int, int>{11, 1}, {13, 2}, {17, 3}}) {
        for (int it = 0; it < 300; ++it) {
            WeightPresentation v;
            v.p = q;
            for (int j = 0; j < f; ++j) {
                v.omega.push_back(random_deep(rng, q, 0) + kEta);
                v.w1.push_back(restricted_element(int(rng() % 2), Int(rng() % 13) - 6));
            }
            auto lam = serre_highest_weight(v);
            CHECK(is_p_restricted(lam, q));
            CHECK(canonical_highest_weight(lam, q) == lam);
            WeightPresentation u = v;
            for (int j = 0; j < f; ++j) {
                Int k = Int(rng() % 9) - 4;
                u.w1[j] = AffElt::translation({k, k, k}) * u.w1[j];
                u.omega[j] = u.omega[j] - Vec3{k, k, k};
            }
            CHECK(serre_highest_weight(u) == lam);
            int dl = int(q), dw = int(q);
            for (int j = 0; j < f; ++j) {
                dl = std::min(dl, alcove_depth(lam[j], q));
                dw = std::min(dw, depth(v.omega[j] - kEta, q));
            }
            CHECK(dl == dw);
        }
    }
}
