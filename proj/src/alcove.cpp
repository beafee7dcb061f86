#include "serrewt/alcove.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Vec3 scalar(Int m) { return {m, m, m}; }

void require_same_size(size_t a, size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string("embedding count mismatch: ") + what);
}

} // namespace

Vec3 lambda_w(const Vec3& v) { return v - scalar(v[2]); }

bool in_root_lattice(const Vec3& v) { return ((total_degree(v) % 3) + 3) % 3 == 0; }

int depth(const Vec3& mu, Int p) {
    Vec3 x = mu + kEta;
    Int n = p;
    for (const auto& a : kPosRoots) {
        Int k = dot(x, a);
        n = std::min({n, k, p - k});
    }
    return int(std::max<Int>(n - 1, -1));
}

int depth(const std::vector<Vec3>& mu, Int p) {
    int d = int(p);
    for (const auto& m : mu) d = std::min(d, depth(m, p));
    return d;
}

int alcove_depth(const Vec3& lam, Int p) {
    Vec3 x = lam + kEta;
    Int n = p;
    for (const auto& a : kPosRoots) {
        Int k = mod_norm(dot(x, a), p);
        n = std::min({n, k, p - k});
    }
    return int(std::max<Int>(n - 1, -1));
}

std::string str(const GraphCoord& g) { return "(" + str(g.eps) + "," + std::to_string(g.digit) + ")"; }

std::string str(const GraphPoint& g) {
    std::string out = "[";
    for (size_t j = 0; j < g.size(); ++j) out += (j ? " " : "") + str(g[j]);
    return out + "]";
}

ProductElt TypePresentation::w_tilde() const {
    require_same_size(s.size(), mu.size(), "type presentation");
    ProductElt out;
    for (size_t j = 0; j < s.size(); ++j) out.push_back(AffElt{mu[j] + kEta, s[j]});
    return out;
}

std::string str(const WeightPresentation& w) {
    std::ostringstream os;
    os << "{";
    for (size_t j = 0; j < w.f(); ++j) os << (j ? "; " : "") << w.w1[j].str() << ", " << str(w.omega[j]);
    os << "}";
    return os.str();
}

const std::array<AffElt, 6>& restricted_reps() {
    static const std::array<AffElt, 6> reps = [] {
        std::array<AffElt, 6> r;
        AffElt o{};
        for (int k = 0; k < 3; ++k) {
            r[k] = o;
            r[k + 3] = w_h() * o;
            o = o * omega_gen();
        }
        return r;
    }();
    return reps;
}

static int rep_index(const AffElt& x) {
    const auto& reps = restricted_reps();
    for (int i = 0; i < 6; ++i) {
        if (reps[i].w != x.w) continue;
        Vec3 d = x.nu - reps[i].nu;
        return d[0] == d[1] && d[1] == d[2] ? i : -1;
    }
    return -1;
}

bool is_restricted(const AffElt& x) { return rep_index(x) >= 0; }

int alcove_digit(const AffElt& x) {
    int i = rep_index(x);
    if (i < 0) throw CompatibilityError("not a p-restricted element: " + x.str());
    return i >= 3;
}

AffElt restricted_element(int digit, Int cls) {
    Int k = ((cls % 3) + 3) % 3;
    const AffElt& rep = restricted_reps()[digit ? k + 3 : k];
    Int m = (cls - omega_component(rep)) / 3;
    return AffElt::translation(scalar(m)) * rep;
}

WeightPresentation canonical(const WeightPresentation& w) {
    require_same_size(w.w1.size(), w.omega.size(), "weight presentation");
    WeightPresentation out = w;
    for (size_t j = 0; j < w.f(); ++j) {
        Vec3 nu = scalar(w.omega[j][2]);
        out.w1[j] = AffElt::translation(nu) * w.w1[j];
        out.omega[j] = w.omega[j] - nu;
    }
    return out;
}

bool equivalent(const WeightPresentation& a, const WeightPresentation& b) {
    return a.f() == b.f() && canonical(a) == canonical(b);
}

std::vector<Int> zeta_of(const WeightPresentation& w) {
    std::vector<Int> z;
    for (size_t j = 0; j < w.f(); ++j) z.push_back(total_degree(w.omega[j] - kEta) + omega_component(w.w1[j]));
    return z;
}

std::vector<Int> zeta_of(const TypePresentation& t) {
    std::vector<Int> z;
    for (const auto& x : t.w_tilde()) z.push_back(omega_component(x));
    return z;
}

std::vector<Int> zeta_of_lambda(const std::vector<Vec3>& lam) {
    std::vector<Int> z;
    for (const auto& l : lam) z.push_back(total_degree(l - kEta));
    return z;
}

GraphPoint to_graph(const WeightPresentation& w, const std::vector<Vec3>& lam) {
    require_same_size(w.f(), lam.size(), "to_graph");
    if (zeta_of(w) != zeta_of_lambda(lam))
        throw CompatibilityError("central character of " + str(w) + " does not match the base weight");
    GraphPoint g;
    for (size_t j = 0; j < w.f(); ++j) g.push_back({lambda_w(w.omega[j] - lam[j]), alcove_digit(w.w1[j])});
    return g;
}

WeightPresentation from_graph(const GraphPoint& g, const std::vector<Vec3>& lam, const std::vector<Int>& zeta,
                              Int p, int min_depth) {
    require_same_size(g.size(), lam.size(), "from_graph");
    require_same_size(g.size(), zeta.size(), "from_graph");
    if (zeta != zeta_of_lambda(lam)) throw CompatibilityError("central character does not match the base weight");
    WeightPresentation w;
    w.p = p;
    for (size_t j = 0; j < g.size(); ++j) {
        Vec3 om = lam[j] + lambda_w(g[j].eps);
        Int cls = zeta[j] + 3 - total_degree(om);
        w.w1.push_back(restricted_element(g[j].digit, cls));
        w.omega.push_back(om);
        if (depth(om - kEta, p) < min_depth)
            throw DepthError("omega - eta = " + str(om - kEta) + " is not " + std::to_string(min_depth) + "-deep");
    }
    return canonical(w);
}

GraphCoord graph_act(const AffElt& x, const GraphCoord& g) { return {lambda_w(x(g.eps)), g.digit}; }

GraphPoint graph_act(const ProductElt& x, const GraphPoint& g) {
    require_same_size(x.size(), g.size(), "graph_act");
    GraphPoint out;
    for (size_t j = 0; j < g.size(); ++j) out.push_back(graph_act(x[j], g[j]));
    return out;
}

Vec3 barycenter3(const GraphCoord& g) {
    return 3 * lambda_w(g.eps) + (g.digit ? Vec3{4, 2, 0} : Vec3{2, 1, 0});
}

GraphCoord locate_alcove(const Vec3& y) {
    Int u = y[0] - y[1], w = y[1] - y[2];
    Int fu = floor_div(u, 3), fw = floor_div(w, 3);
    Int ru = u - 3 * fu, rw = w - 3 * fw;
    if (ru == 0 || rw == 0 || ru + rw == 3) throw std::invalid_argument("point lies on an alcove wall");
    return {{fu + fw, fw, 0}, ru + rw > 3};
}

GraphCoord graph_act_geometric(const AffElt& x, const GraphCoord& g) {
    return locate_alcove(3 * x.nu + x.w(barycenter3(g)));
}

std::vector<Vec3> canonical_highest_weight(const std::vector<Vec3>& lam, Int p) {
    const size_t f = lam.size();
    Int q = 1;
    for (size_t j = 0; j < f; ++j) q *= p;
    Int m = q - 1;
    // X^0 / (p - pi)X^0 = Z/(p^f - 1) via nu -> sum nu_j p^j
    Int n = 0, pj = 1;
    for (size_t j = 0; j < f; ++j) {
        n = mod_norm(n + mod_norm(lam[j][2], m) * pj, m);
        pj = pj * p % m;
    }
    std::vector<Vec3> out(f);
    for (size_t j = 0; j < f; ++j) {
        Int d = n % p;
        n /= p;
        out[j] = lam[j] + scalar(d - lam[j][2]);
    }
    return out;
}

std::vector<Vec3> serre_highest_weight(const WeightPresentation& w) {
    const size_t f = w.f();
    std::vector<Vec3> lam(f);
    for (size_t j = 0; j < f; ++j) lam[j] = p_dot(w.w1[(j + 1) % f], w.omega[j] - kEta, w.p);
    return canonical_highest_weight(lam, w.p);
}

bool is_p_restricted(const std::vector<Vec3>& lam, Int p) {
    for (const auto& l : lam)
        for (int i = 0; i < 2; ++i) {
            Int k = dot(l, kPosRoots[i]);
            if (k < 0 || k >= p) return false;
        }
    return true;
}

} // namespace serrewt
