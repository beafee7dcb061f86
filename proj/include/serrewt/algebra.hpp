#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "serrewt/poly.hpp"

namespace serrewt {

class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    // reduced Groebner basis, computed once
    const std::vector<Poly>& gb() const;
    bool is_unit() const;
    bool is_zero() const;
    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::shared_ptr<std::vector<Poly>> gb_;
};

// Buchberger with the coprime and chain criteria; result is reduced and monic
std::vector<Poly> groebner(const IdealHandle& I);
std::vector<Poly> groebner(const RingPtr& ring, const std::vector<Poly>& gens);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);
Poly reduce(const Poly& f, const IdealHandle& I);
bool ideal_member(const Poly& f, const IdealHandle& I);
Poly s_polynomial(const Poly& f, const Poly& g);
bool buchberger_closed(const std::vector<Poly>& basis);

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_intersect(const std::vector<IdealHandle>& Is);
// I : f^infinity, by eliminating u from I + (1 - u f)
IdealHandle ideal_saturate(const IdealHandle& I, const Poly& f);
bool ideal_contains(const IdealHandle& I, const IdealHandle& J); // J subset of I
bool ideal_equal(const IdealHandle& I, const IdealHandle& J);

// structure constants (a,b,c) of the tame type modulo p
struct StructureConstants {
    Int a = 0, b = 0, c = 0;
    Int p = 0;

    // minimum over the cyclic gaps a-b, b-c, and c-a+p (the last measured after the shift by 1)
    int genericity() const;
    // constants for the table formulas; e' is -1 modulo p
    std::map<std::string, Int> constants() const;
    // the substitution a -> b, b -> c, c -> a - e' applied `shift` times
    StructureConstants shifted(int shift) const;
    std::string str() const;
};

// a > b > c in [0,p), gaps a-b, b-c >= g, a-c <= p-g-1 with g = min(5, (p-1)/3)
StructureConstants random_generic_sc(Int p, std::mt19937_64& rng);
bool sc_in_envelope(const StructureConstants& sc);

// ---- component tables

const std::vector<std::string>& component_rows(); // abag bgag bag abg aba ab ba a id

struct TableRing {
    std::string row;
    int shift = 0;
    RingPtr ring;
    IdealHandle ideal;              // special-fiber relations, p -> 0, e' -> -1
    std::vector<std::string> units; // starred variables
    Poly unit_product;
};

TableRing table_ring(const std::string& row, const StructureConstants& sc, int shift = 0);
// "0,0", "e1,1", "e1+e2,0", "e2-e1,0", ...
std::vector<std::string> component_labels(const std::string& row);
// the printed generators only
IdealHandle component_generators(const std::string& row, const std::string& label, const StructureConstants& sc,
                                 int shift = 0);
// the component as an ideal of the coordinate ring: printed generators plus the row relations,
// saturated at the units
IdealHandle component_ideal(const std::string& row, const std::string& label, const StructureConstants& sc,
                            int shift = 0);
IdealHandle saturate_units(const TableRing& tr, const IdealHandle& I);

struct ComponentReport {
    std::string row;
    int shift = 0;
    bool proper = true;     // every component is a proper ideal
    bool minimal = true;    // no component contains another
    bool intersection = true; // the intersection equals the row ideal (both saturated)
    std::vector<std::string> failures;
    size_t gb_size = 0;

    bool ok() const { return proper && minimal && intersection; }
};

ComponentReport verify_components(const std::string& row, const StructureConstants& sc, int shift = 0);

// identity k in {1,2,3,4}; lemma 4 carries three displayed identities, index 0..2
struct LemmaIdentity {
    int lemma;
    int index;
    std::string row; // "id" or "a"
    std::vector<std::string> left1, left2, right; // intersections of components
};
const std::vector<LemmaIdentity>& lemma_identities();

// negates one term of one printed generator of a right-hand component
struct Mutation {
    size_t component = 0; // position in LemmaIdentity::right
    size_t generator = 0;
    size_t term = 0;
};

// gb_size, when given, receives the size of the right-hand side's reduced basis
bool verify_identity(const LemmaIdentity& id, const StructureConstants& sc, const Mutation* mutation = nullptr,
                     size_t* gb_size = nullptr);
bool verify_lemma(int k, const StructureConstants& sc, size_t* gb_size = nullptr);
// runs every single-term sign flip of the right-hand sides of lemma k
struct MutationSummary {
    int tried = 0;
    int flipped = 0;
    int unchanged_ideal = 0; // perturbation left the ideal as it was (monomial generators)
};
MutationSummary mutation_test(int k, const StructureConstants& sc);

// one line-delimited JSON record per check
struct RegressionRecord {
    std::string row;
    Int p, a, b, c;
    std::string check;
    bool verdict;
    size_t gb_size;
};
std::string to_line(const RegressionRecord& r);
RegressionRecord from_line(const std::string& line);

} // namespace serrewt
