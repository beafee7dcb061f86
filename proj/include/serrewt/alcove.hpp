#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "serrewt/weyl.hpp"

namespace serrewt {

// Lambda_W = X*(T)/X^0 with the lift whose third coordinate is 0
Vec3 lambda_w(const Vec3& v);
bool in_root_lattice(const Vec3& v); // modulo X^0

// Largest N >= -1 with N < <mu+eta, a> < p-N for every positive coroot a.
int depth(const Vec3& mu, Int p);
int depth(const std::vector<Vec3>& mu, Int p);
// the same margin measured inside whichever p-alcove lam + eta lies in
int alcove_depth(const Vec3& lam, Int p);

// (eps, digit): eps + C_digit, C_0 the lower and C_1 the upper restricted alcove
struct GraphCoord {
    Vec3 eps{0, 0, 0};
    int digit = 0;

    auto operator<=>(const GraphCoord&) const = default;
};
using GraphPoint = std::vector<GraphCoord>;

std::string str(const GraphCoord& g);
std::string str(const GraphPoint& g);

// lowest alcove presentation (s, mu) of the type tau(s, mu+eta)
struct TypePresentation {
    std::vector<Perm> s;
    std::vector<Vec3> mu;
    Int p = 0;

    size_t f() const { return s.size(); }
    ProductElt w_tilde() const; // t_{mu+eta} s
};

// (w1, omega) up to ~; members of serrewt store the canonical representative
struct WeightPresentation {
    ProductElt w1;
    std::vector<Vec3> omega;
    Int p = 0;

    size_t f() const { return w1.size(); }
    auto operator<=>(const WeightPresentation&) const = default;
};

std::string str(const WeightPresentation& w);

// W~_1^+ modulo X^0: omega^k (digit 0) and w_h omega^k (digit 1), k = 0,1,2
const std::array<AffElt, 6>& restricted_reps();
bool is_restricted(const AffElt& x);
int alcove_digit(const AffElt& x); // throws CompatibilityError outside W~_1^+
AffElt restricted_element(int digit, Int cls);

WeightPresentation canonical(const WeightPresentation& w);
bool equivalent(const WeightPresentation& a, const WeightPresentation& b);

std::vector<Int> zeta_of(const WeightPresentation& w);
std::vector<Int> zeta_of(const TypePresentation& t);
std::vector<Int> zeta_of_lambda(const std::vector<Vec3>& lam); // (lam - eta)|_Z

GraphPoint to_graph(const WeightPresentation& w, const std::vector<Vec3>& lam);
WeightPresentation from_graph(const GraphPoint& g, const std::vector<Vec3>& lam, const std::vector<Int>& zeta,
                              Int p, int min_depth = 0);

// (eps, a) -> (nu + w(eps), a); the digit is carried along unchanged
GraphCoord graph_act(const AffElt& x, const GraphCoord& g);
GraphPoint graph_act(const ProductElt& x, const GraphPoint& g);

// The alcove eps + C_digit moved by the affine map nu + w(-), located by its
// barycenter. Kept for comparison; it disagrees with the constituent formula.
GraphCoord graph_act_geometric(const AffElt& x, const GraphCoord& g);

// 3 * barycenter of eps + C_digit, and the inverse for points off the walls
Vec3 barycenter3(const GraphCoord& g);
GraphCoord locate_alcove(const Vec3& point3);

// highest weight of F_{(w1, omega)}, canonical modulo (p - pi)X^0
std::vector<Vec3> serre_highest_weight(const WeightPresentation& w);
std::vector<Vec3> canonical_highest_weight(const std::vector<Vec3>& lam, Int p);
bool is_p_restricted(const std::vector<Vec3>& lam, Int p);

} // namespace serrewt
