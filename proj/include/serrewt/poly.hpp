#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "serrewt/laurent.hpp"

namespace serrewt {

// Variables in declaration order; grevlex compares along this order (first variable largest).
// modulus 0 means integer coefficients. The first `elim` variables form an elimination block:
// monomials compare by their degree in that block first.
struct Ring {
    std::vector<std::string> vars;
    Int modulus = 0;
    int elim = 0;

    int index(const std::string& name) const; // -1 if absent
    size_t size() const { return vars.size(); }
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> vars, Int modulus, int elim = 0);

// exponents may be negative while a polynomial is only evaluated (units like (c23*)^-1);
// Groebner code rejects them
using Monomial = std::vector<int>;

struct GrevlexGreater {
    int elim = 0;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)), terms_(GrevlexGreater{ring_ ? ring_->elim : 0}) {}
    static Poly constant(RingPtr ring, Int c);
    static Poly variable(RingPtr ring, const std::string& name);
    static Poly term(RingPtr ring, Monomial m, Int c);

    const RingPtr& ring() const { return ring_; }
    Int modulus() const { return ring_ ? ring_->modulus : 0; }
    const std::map<Monomial, Int, GrevlexGreater>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // leading term in grevlex; undefined on zero
    const Monomial& lead_monomial() const { return terms_.begin()->first; }
    Int lead_coeff() const { return terms_.begin()->second; }
    int total_degree() const;
    bool has_negative_exponents() const;

    void add_term(const Monomial& m, Int c);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Int c) const;
    Poly times_term(const Monomial& m, Int c) const;
    Poly monic() const; // over a field
    Poly pow(int e) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // same polynomial in another ring, matching variables by name; throws MissingVariable
    Poly to_ring(const RingPtr& other) const;
    // substitute values for every variable except keep; result is a Laurent polynomial in keep
    LaurentPoly eval_laurent(const std::map<std::string, Int>& values, const std::string& keep) const;
    Int eval(const std::map<std::string, Int>& values) const;
    std::vector<std::string> used_variables() const;

    std::string str() const;

private:
    Int norm(Int c) const;
    RingPtr ring_;
    std::map<Monomial, Int, GrevlexGreater> terms_;
};

// Parses sums of products of integers, ring variables, named constants and parenthesized
// groups, with ^ (integer exponent, negative allowed). Unknown identifiers throw MissingVariable.
Poly parse_poly(const std::string& text, const RingPtr& ring, const std::map<std::string, Int>& constants = {});

} // namespace serrewt
