#include "serrewt/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace serrewt {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
Vec3 operator*(Int k, const Vec3& a) { return {k * a[0], k * a[1], k * a[2]}; }
Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Int total_degree(const Vec3& a) { return a[0] + a[1] + a[2]; }

std::string str(const Vec3& a) {
    std::ostringstream os;
    os << "(" << a[0] << "," << a[1] << "," << a[2] << ")";
    return os.str();
}

static Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

const std::array<Perm, 6>& Perm::all() {
    static const std::array<Perm, 6> perms = [] {
        std::array<Perm, 6> out;
        std::array<std::uint8_t, 3> p{0, 1, 2};
        int k = 0;
        do out[k++] = Perm{p};
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    for (int i = 0; i < 3; ++i) r.img[i] = img[o.img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    for (int i = 0; i < 3; ++i) r.img[img[i]] = std::uint8_t(i);
    return r;
}

Vec3 Perm::operator()(const Vec3& x) const {
    Vec3 y{};
    for (int i = 0; i < 3; ++i) y[img[i]] = x[i];
    return y;
}

int Perm::index() const {
    const auto& a = all();
    return int(std::find(a.begin(), a.end(), *this) - a.begin());
}

int Perm::sign() const {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) inv += img[i] > img[j];
    return inv % 2 ? -1 : 1;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[" << int(img[0]) + 1 << int(img[1]) + 1 << int(img[2]) + 1 << "]";
    return os.str();
}

Perm perm_s1() { return Perm::from_images(1, 0, 2); }
Perm perm_s2() { return Perm::from_images(0, 2, 1); }
Perm perm_w0() { return Perm::from_images(2, 1, 0); }
Perm perm_cyc() { return Perm::from_images(1, 2, 0); }

AffElt AffElt::operator*(const AffElt& o) const { return {nu + w(o.nu), w * o.w}; }

AffElt AffElt::inverse() const {
    Perm wi = w.inverse();
    return {-wi(nu), wi};
}

Vec3 AffElt::operator()(const Vec3& x) const { return nu + w(x); }

std::string AffElt::str() const { return "t" + serrewt::str(nu) + w.str(); }

AffElt compose(const AffElt& x, const AffElt& y) { return x * y; }

ProductElt compose(const ProductElt& x, const ProductElt& y) {
    ProductElt r(x.size());
    for (size_t j = 0; j < x.size(); ++j) r[j] = x[j] * y[j];
    return r;
}

ProductElt inverse(const ProductElt& x) {
    ProductElt r(x.size());
    for (size_t j = 0; j < x.size(); ++j) r[j] = x[j].inverse();
    return r;
}

// (t_nu w)* = w^{-1} t_nu
AffElt star(const AffElt& x) { return AffElt::finite(x.w.inverse()) * AffElt::translation(x.nu); }

ProductElt star(const ProductElt& x) {
    ProductElt r(x.size());
    for (size_t j = 0; j < x.size(); ++j) r[j] = star(x[j]);
    return r;
}

const std::array<AffElt, 3>& simple_reflections(Convention c) {
    static const std::array<AffElt, 3> dom{AffElt::finite(perm_s1()), AffElt::finite(perm_s2()),
                                           AffElt{{1, 0, -1}, perm_w0()}};
    static const std::array<AffElt, 3> anti{AffElt::finite(perm_s1()), AffElt::finite(perm_s2()),
                                            AffElt{{-1, 0, 1}, perm_w0()}};
    return c == Convention::dominant ? dom : anti;
}

// Count affine root hyperplanes between the base alcove and its image, using
// barycenters scaled by 3: the dominant base alcove has 3*barycenter = eta.
int length(const AffElt& x, Convention c) {
    Int sgn = c == Convention::dominant ? 1 : -1;
    Vec3 b = 3 * x.nu + sgn * x.w(kEta);
    int n = 0;
    for (const auto& a : kPosRoots) {
        Int k = floor_div(dot(b, a), 3);
        // base alcove lies in the strip [0,1) resp. [-1,0) for each root
        Int k0 = c == Convention::dominant ? 0 : -1;
        n += int(std::abs(k - k0));
    }
    return n;
}

ReducedWord reduced_word(const AffElt& x, Convention c) {
    const auto& S = simple_reflections(c);
    ReducedWord out;
    AffElt cur = x;
    int l = length(cur, c);
    while (l > 0) {
        bool moved = false;
        for (int i = 0; i < 3; ++i) {
            AffElt nxt = S[i] * cur;
            if (length(nxt, c) < l) {
                out.word.push_back(i);
                cur = nxt;
                --l;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("no descent found for element of positive length");
    }
    out.omega = cur;
    return out;
}

bool bruhat_leq(const AffElt& x, const AffElt& y, Convention c) {
    if (omega_component(x) != omega_component(y)) return false;
    const auto& S = simple_reflections(c);
    AffElt a = x, b = y;
    int la = length(a, c), lb = length(b, c);
    while (true) {
        if (la > lb) return false;
        if (lb == 0) return a == b;
        int i = 0;
        for (; i < 3; ++i)
            if (length(S[i] * b, c) < lb) break;
        AffElt sa = S[i] * a;
        int lsa = length(sa, c);
        if (lsa < la) {
            a = sa;
            la = lsa;
        }
        b = S[i] * b;
        --lb;
    }
}

static std::vector<AffElt> compute_admissible(Convention c) {
    const auto& S = simple_reflections(c);
    std::vector<AffElt> tops;
    for (const auto& s : Perm::all()) tops.push_back(AffElt::translation(s(kEta)));

    // every element of the coset of t_1 with length <= 4 is reached from t_1
    std::set<AffElt> seen{t_one()};
    std::vector<AffElt> frontier{t_one()};
    for (int step = 0; step < 4; ++step) {
        std::vector<AffElt> next;
        for (const auto& e : frontier)
            for (const auto& s : S) {
                AffElt n = s * e;
                if (length(n, c) <= 4 && seen.insert(n).second) next.push_back(n);
            }
        frontier = std::move(next);
    }
    std::vector<AffElt> out;
    for (const auto& e : seen)
        for (const auto& t : tops)
            if (bruhat_leq(e, t, c)) {
                out.push_back(e);
                break;
            }
    return out;
}

std::vector<AffElt> admissible_set(Convention c) {
    static const std::vector<AffElt> dom = compute_admissible(Convention::dominant);
    static const std::vector<AffElt> anti = compute_admissible(Convention::antidominant);
    return c == Convention::dominant ? dom : anti;
}

bool in_admissible(const AffElt& x, Convention c) {
    for (const auto& s : Perm::all())
        if (bruhat_leq(x, AffElt::translation(s(kEta)), c)) return true;
    return false;
}

// W_a = Lambda_R x W has total degree zero, so the class is the degree of nu.
Int omega_component(const AffElt& x) { return total_degree(x.nu); }

ProductElt pi_twist(const ProductElt& x) {
    const size_t f = x.size();
    ProductElt r(f);
    for (size_t j = 0; j < f; ++j) r[j] = x[(j + f - 1) % f];
    return r;
}

Vec3 p_dot(const AffElt& x, const Vec3& mu, Int p) { return p * x.nu + x.w(mu + kEta) - kEta; }

AffElt omega_gen() { return AffElt{{1, 0, 0}, perm_cyc()}; }
AffElt w_h() { return AffElt::finite(perm_w0()) * AffElt::translation(-kEta); }
AffElt gen_alpha() { return AffElt::finite(perm_s1()); }
AffElt gen_beta() { return AffElt::finite(perm_s2()); }
AffElt gen_gamma() { return AffElt::finite(perm_w0()) * AffElt::translation({1, 0, -1}); }
AffElt t_one() { return AffElt::translation(kOne); }

LaurentMatrix to_matrix(const AffElt& x) {
    LaurentMatrix m;
    for (int j = 0; j < 3; ++j) {
        int i = x.w[j];
        m.at(i, j).set(int(x.nu[i]), 1);
    }
    return m;
}

} // namespace serrewt
