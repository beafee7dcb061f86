#include "serrewt/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace serrewt {

Int mod_norm(Int a, Int p) {
    a %= p;
    return a < 0 ? a + p : a;
}

Int mod_inv(Int a, Int p) {
    Int t = 0, nt = 1, r = p, nr = mod_norm(a, p);
    while (nr) {
        Int q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return mod_norm(t, p);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp, Int modulus) {
    LaurentPoly f(modulus);
    f.set(exp, coeff);
    return f;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::set(int exp, Int c) {
    c = norm(c);
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

void LaurentPoly::add(int exp, Int c) { set(exp, coeff(exp) + c); }

LaurentPoly LaurentPoly::reduce(Int p) const {
    LaurentPoly r(p);
    for (auto [e, c] : terms_) r.set(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    if (!r.mod_) r.mod_ = o.mod_;
    for (auto [e, c] : o.terms_) r.add(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(mod_);
    for (auto [e, c] : terms_) r.set(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(mod_ ? mod_ : o.mod_);
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : o.terms_) {
            Int prod = r.mod_ ? mod_norm(c1, r.mod_) * mod_norm(c2, r.mod_) : c1 * c2;
            r.add(e1 + e2, prod);
        }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Int a = c < 0 ? -c : c;
        first = false;
        if (e == 0) { os << a; continue; }
        if (a != 1) os << a << "*";
        os << "v";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentMatrix::LaurentMatrix(Int modulus) : mod_(modulus) {
    for (auto& row : e_)
        for (auto& x : row) x = LaurentPoly(modulus);
}

LaurentMatrix LaurentMatrix::identity(Int modulus) {
    LaurentMatrix m(modulus);
    for (int i = 0; i < 3; ++i) m.at(i, i).set(0, 1);
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    LaurentMatrix r(mod_ ? mod_ : o.mod_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            LaurentPoly acc(r.mod_);
            for (int k = 0; k < 3; ++k) acc = acc + e_[i][k] * o.e_[k][j];
            r.e_[i][j] = acc;
        }
    return r;
}

LaurentMatrix LaurentMatrix::reduce(Int p) const {
    LaurentMatrix r(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.e_[i][j] = e_[i][j].reduce(p);
    return r;
}

LaurentPoly LaurentMatrix::det() const {
    const auto& a = e_;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::string LaurentMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << e_[i][j].str();
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace serrewt
