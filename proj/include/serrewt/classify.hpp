#pragma once

#include <array>
#include <functional>
#include <vector>

#include "serrewt/weightsets.hpp"

namespace serrewt {

// (y, (w~, y w~^{-1}(0))); w~ is kept as the restricted representative it was built from
struct SpecPair {
    ProductElt y;
    WeightPresentation weight;

    size_t f() const { return y.size(); }
    // identity is up to ~ on the weight
    bool operator<(const SpecPair& o) const;
    bool operator==(const SpecPair& o) const;
};

std::string str(const SpecPair& sp);

enum class Branch { new_specialization, new_weight };

// decision for walking from sp by the simple reflection s (0 = s1, 1 = s2) in embedding j
using BranchOracle = std::function<Branch(const SpecPair& sp, size_t j, int s)>;

// the six edges {theta, theta s} of the Cayley graph of W, in a fixed order
int edge_index(const Perm& theta, int s);
// per embedding, bit e of mask picks new_weight on edge e
BranchOracle edge_oracle(const std::vector<unsigned>& masks);
BranchOracle constant_oracle(Branch b);

SpecPair make_pair(const ProductElt& y, const ProductElt& w_tilde, Int p);

// pairs (x, (w~, x w~^{-1}(0))) over w~ in (W~_1^+/X^0)^f, shallow ones dropped
std::vector<SpecPair> sp_fixed(const ProductElt& x, Int p);

// the tame type (s, mu) with x = t_{mu+eta+(1,1,1)} s, normalized so its W? has the central character of x
TypePresentation type_of_point(const ProductElt& x, Int p);
std::vector<WeightPresentation> wg_fixed(const ProductElt& x, Int p);
// {(w~, x w~2^{-1}(0)) : w~2 up-linked to w~}, literal enumeration
std::vector<WeightPresentation> wg_fixed_oracle(const ProductElt& x, Int p);

AffElt tilde_sw(const AffElt& w_tilde, int s);
std::vector<Perm> theta(const SpecPair& sp);

SpecPair simple_walk(const SpecPair& sp, size_t j, int s, const BranchOracle& oracle);

std::vector<SpecPair> close_sp(const SpecPair& seed, const BranchOracle& oracle);
std::vector<ProductElt> specializations(const std::vector<SpecPair>& sps);
std::vector<WeightPresentation> obvious_weights(const std::vector<SpecPair>& sps);
// intersection of wg_fixed(y) over the specializations, embedding by embedding
std::vector<WeightPresentation> wg_upper_bound(const std::vector<SpecPair>& sps);

// unprimed (obvious) and primed (geometric) literal lists
const SigmaTemplate& case_obv(int case_id);
const SigmaTemplate& case_obv_bound(int case_id); // upper bound for the geometric weights
const SigmaTemplate& case_geometric(int case_id, bool upper_variant = false);

struct CaseDescriptor {
    std::vector<int> case_id;
    std::vector<Perm> w;
    std::vector<Vec3> lam;        // nominal base, eps measured from here; third coordinate 0
    std::vector<bool> mirrored;   // the list is read through eps -> -eps
    std::vector<bool> sub_variant; // case 1 only: geometric set {(0,0),(0,1)} instead of {(0,0)}
    std::vector<Int> zeta;
    Int p = 0;
    int genericity = 6;           // W^g itself (not only W^g_gen) once this reaches 8

    size_t f() const { return case_id.size(); }
};

CaseDescriptor classify_case(const std::vector<SpecPair>& sps);

// literal coordinates <-> weights through a descriptor
WeightPresentation place(const CaseDescriptor& cd, const GraphPoint& literal);
GraphPoint unplace(const CaseDescriptor& cd, const WeightPresentation& w);

// t_nu s(Sigma_0) for nu in the root lattice with |nu_i| <= radius, s in W
std::vector<SigmaTemplate> sigma0_translates(int radius = 4);
bool never_three(const SigmaTemplate& sigma, int radius = 4);
SigmaTemplate sigma_g_from_bounds(const SigmaTemplate& lb, const SigmaTemplate& ub);

std::vector<WeightPresentation> wg_from_case(const CaseDescriptor& cd);
bool wg_exact(const CaseDescriptor& cd);

int spec_genericity(int m);

} // namespace serrewt
