#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "serrewt/laurent.hpp"

namespace serrewt {

// X*(T) = Z^3
using Vec3 = std::array<Int, 3>;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(Int k, const Vec3& a);
Int dot(const Vec3& a, const Vec3& b);
Int total_degree(const Vec3& a);
std::string str(const Vec3& a);

inline constexpr Vec3 kEta{2, 1, 0};
inline constexpr Vec3 kOne{1, 1, 1};
inline constexpr Vec3 kEps1{1, 0, 0};
inline constexpr Vec3 kEps2{0, 0, -1};
// positive roots, self-dual pairing
inline constexpr std::array<Vec3, 3> kPosRoots{Vec3{1, -1, 0}, Vec3{0, 1, -1}, Vec3{1, 0, -1}};

// Permutation of {0,1,2}; acts on Z^3 by w(e_i) = e_{w(i)}.
struct Perm {
    std::array<std::uint8_t, 3> img{0, 1, 2};

    static Perm identity() { return {}; }
    static Perm from_images(int a, int b, int c) { return Perm{{std::uint8_t(a), std::uint8_t(b), std::uint8_t(c)}}; }
    static const std::array<Perm, 6>& all();
    static Perm from_index(int i) { return all()[i]; }

    int operator[](int i) const { return img[i]; }
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    Vec3 operator()(const Vec3& x) const;
    int index() const;
    int sign() const;
    bool is_identity() const { return img[0] == 0 && img[1] == 1 && img[2] == 2; }
    std::string str() const;

    auto operator<=>(const Perm&) const = default;
};

Perm perm_s1();  // (12)
Perm perm_s2();  // (23)
Perm perm_w0();  // (13)
Perm perm_cyc(); // e1 -> e2 -> e3 -> e1

// t_nu w
struct AffElt {
    Vec3 nu{0, 0, 0};
    Perm w{};

    static AffElt translation(const Vec3& v) { return {v, Perm{}}; }
    static AffElt finite(const Perm& p) { return {{0, 0, 0}, p}; }

    AffElt operator*(const AffElt& o) const;
    AffElt inverse() const;
    Vec3 operator()(const Vec3& x) const; // unscaled affine action nu + w(x)
    bool is_identity() const { return w.is_identity() && nu == Vec3{0, 0, 0}; }
    std::string str() const;

    auto operator<=>(const AffElt&) const = default;
};

using ProductElt = std::vector<AffElt>;

AffElt compose(const AffElt& x, const AffElt& y);
ProductElt compose(const ProductElt& x, const ProductElt& y);
ProductElt inverse(const ProductElt& x);
AffElt star(const AffElt& x);
ProductElt star(const ProductElt& x);

enum class Convention { dominant, antidominant };

// s_1, s_2, and the affine reflection of the chosen base-alcove system
const std::array<AffElt, 3>& simple_reflections(Convention c);

int length(const AffElt& x, Convention c = Convention::dominant);

struct ReducedWord {
    std::vector<int> word; // indices into simple_reflections
    AffElt omega;          // length-zero tail: x = s_{word[0]} ... s_{word[k-1]} * omega
};
ReducedWord reduced_word(const AffElt& x, Convention c = Convention::dominant);

bool bruhat_leq(const AffElt& x, const AffElt& y, Convention c = Convention::dominant);
std::vector<AffElt> admissible_set(Convention c = Convention::dominant);
bool in_admissible(const AffElt& x, Convention c);

Int omega_component(const AffElt& x);
ProductElt pi_twist(const ProductElt& x);
Vec3 p_dot(const AffElt& x, const Vec3& mu, Int p);

// named elements
AffElt omega_gen();   // t_{(1,0,0)} * cycle; generates Omega modulo X^0
AffElt w_h();         // w0 t_{-eta}
AffElt gen_alpha();
AffElt gen_beta();
AffElt gen_gamma();   // w0 t_{(1,0,-1)}
AffElt t_one();       // t_{(1,1,1)}

LaurentMatrix to_matrix(const AffElt& x);

} // namespace serrewt
