#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "serrewt/laurent.hpp"
#include "serrewt/poly.hpp"
#include "serrewt/weyl.hpp"

namespace serrewt {

struct ShapeResult {
    AffElt elt;           // A in I * to_matrix(elt) * I, matrix-side convention
    Vec3 valuations;      // translation part of elt
    LaurentMatrix left;   // left * A * right is monomial with the pattern of elt, up to O(v^precision)
    LaurentMatrix right;
    LaurentMatrix reduced;
    int precision = 0;
};

// integral, upper triangular mod v, nonzero constant diagonal
bool in_iwahori(const LaurentMatrix& m);

ShapeResult iwahori_decompose(const LaurentMatrix& A, bool require_adapted = false);
// recomputes left*A*right and checks the factors and the monomial pattern
bool verify_shape(const LaurentMatrix& A, const ShapeResult& r);

LaurentMatrix random_iwahori(std::mt19937_64& rng, Int p, int max_degree = 3);

struct Cocharacter {
    Vec3 left{0, 0, 0};
    Vec3 right{0, 0, 0};
    int rotation = 0;
};
// lim_{t->0} diag(t^left) A(t^rotation v) diag(t^right); throws DecompositionError when some term
// has negative weight. The limit lies in the closure of the double coset of A.
LaurentMatrix torus_limit(const LaurentMatrix& A, const Cocharacter& c);
// cocharacters with entries in [-range, range] (rotation >= 0, right[2] = 0) whose limit
// exists, is invertible and differs from A
std::vector<Cocharacter> degenerating_cocharacters(const LaurentMatrix& A, int range = 2);

ProductElt shape_fixed(const ProductElt& y, const ProductElt& w_tau);
bool in_admissible(const ProductElt& shape, Convention c = Convention::antidominant);
bool semicont_leq(const ProductElt& shape_y, const ProductElt& shape_x, Convention c = Convention::antidominant);

// Coordinate charts around z: rows are z t_{-1} for nine z; the remaining cells come from
// conjugation by delta, which renames c_{ik} to c_{(i+1)(k+1)}.
// Variable names: c11 plain, c11s starred (a unit), c11p primed.
const std::vector<std::string>& table_rows(); // abag bgag bag abg aba ab ba a id
AffElt row_element(const std::string& row);  // z t_{-1}
AffElt delta();

struct ChartRef {
    std::string row;
    int shift = 0; // z t_{-1} = delta^shift row delta^-shift
};
ChartRef chart_of(const AffElt& z);        // throws UnknownRow
AffElt chart_element(const ChartRef& c);   // z (including t_1)
std::vector<ChartRef> all_charts();        // 25 distinct charts

std::string shift_name(const std::string& var, int shift);
std::vector<std::string> chart_variables(const ChartRef& c);
bool is_starred(const std::string& var);
// generators of I_z in the chart's names, coefficients mod p (p -> 0) or over Z with p symbolic
std::vector<Poly> chart_relations(const ChartRef& c, Int p, bool integral = false);
// entries in chart names plus v (and p when integral)
std::array<std::array<Poly, 3>, 3> chart_matrix_symbolic(const ChartRef& c, Int p, bool integral = false);

// mod p matrix; integral = true keeps integer coefficients and substitutes p for the symbol p
LaurentMatrix universal_matrix(const AffElt& z, const std::map<std::string, Int>& assignment, Int p,
                               bool integral = false);

// a random point of the chart's special fiber: units nonzero, I_z satisfied
std::map<std::string, Int> random_assignment(const ChartRef& c, Int p, std::mt19937_64& rng);

} // namespace serrewt
