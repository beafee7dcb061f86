#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace serrewt {

using Int = std::int64_t;

Int mod_norm(Int a, Int p);
Int mod_inv(Int a, Int p);

// Sparse Laurent polynomial in v. modulus == 0 means integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int modulus) : mod_(modulus) {}
    static LaurentPoly monomial(Int coeff, int exp, Int modulus = 0);

    Int modulus() const { return mod_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(int exp) const;
    void set(int exp, Int c);
    void add(int exp, Int c);
    const std::map<int, Int>& terms() const { return terms_; }

    // lowest / highest exponent; undefined on zero
    int valuation() const { return terms_.begin()->first; }
    int degree() const { return terms_.rbegin()->first; }

    LaurentPoly reduce(Int p) const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    Int norm(Int c) const { return mod_ ? mod_norm(c, mod_) : c; }
    std::map<int, Int> terms_;
    Int mod_ = 0;
};

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(Int modulus);
    static LaurentMatrix identity(Int modulus = 0);

    Int modulus() const { return mod_; }
    LaurentPoly& at(int i, int j) { return e_[i][j]; }
    const LaurentPoly& at(int i, int j) const { return e_[i][j]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const { return e_ == o.e_; }
    LaurentMatrix reduce(Int p) const;
    LaurentPoly det() const;
    std::string str() const;

private:
    std::array<std::array<LaurentPoly, 3>, 3> e_;
    Int mod_ = 0;
};

} // namespace serrewt
