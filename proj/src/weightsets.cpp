#include "serrewt/weightsets.hpp"

#include <algorithm>
#include <set>

#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

const Vec3 e1 = kEps1, e2 = kEps2;

void check_lattice(const TypePresentation& tau, const std::vector<Vec3>& lam) {
    if (lam.size() != tau.f()) throw CompatibilityError("base weight has the wrong number of embeddings");
    for (size_t j = 0; j < tau.f(); ++j)
        if (!in_root_lattice(tau.mu[j] + kEta - lam[j]))
            throw LatticeError("mu + eta - lam = " + str(tau.mu[j] + kEta - lam[j]) + " is not in the root lattice");
    if (zeta_of(tau) != zeta_of_lambda(lam))
        throw CompatibilityError("base weight does not carry the central character of the type");
    for (const auto& l : lam)
        if (depth(l - kEta, tau.p) < 0) throw DepthError("lam - eta = " + str(l - kEta) + " is not 0-deep");
}

// the f-fold product, each factor read from tmpl
std::vector<GraphPoint> power(const SigmaTemplate& tmpl, size_t f) {
    std::vector<GraphPoint> out{GraphPoint{}};
    for (size_t j = 0; j < f; ++j) {
        std::vector<GraphPoint> next;
        for (const auto& g : out)
            for (const auto& e : tmpl) {
                GraphPoint h = g;
                h.push_back(e);
                next.push_back(h);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<WeightPresentation> realize(const TypePresentation& tau, const std::vector<Vec3>& lam,
                                        const SigmaTemplate& tmpl, bool skip_shallow) {
    std::set<WeightPresentation> out;
    auto zeta = zeta_of_lambda(lam);
    for (const auto& g : translate_template(tau, lam, tmpl)) {
        try {
            out.insert(from_graph(g, lam, zeta, tau.p));
        } catch (const DepthError&) {
            if (!skip_shallow) throw;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<WeightPresentation> jh_like(const TypePresentation& tau, const std::vector<Vec3>& lam,
                                        const SigmaTemplate& tmpl) {
    int d = depth(tau.mu, tau.p);
    if (d < 1) throw DepthError("type is not 1-generic (mu is " + std::to_string(d) + "-deep)");
    check_lattice(tau, lam);
    return realize(tau, lam, tmpl, d < 2);
}

} // namespace

const SigmaTemplate& sigma0() {
    static const SigmaTemplate s{
        {lambda_w(e1 + e2), 0}, {lambda_w(e1 - e2), 0}, {lambda_w(e2 - e1), 0},
        {{0, 0, 0}, 1},         {lambda_w(e1), 1},      {lambda_w(e2), 1},
        {{0, 0, 0}, 0},         {lambda_w(e1), 0},      {lambda_w(e2), 0},
    };
    return s;
}

const SigmaTemplate& sigma_out() {
    static const SigmaTemplate s(sigma0().begin(), sigma0().begin() + 6);
    return s;
}

SigmaTemplate flip_digits(const SigmaTemplate& s) {
    SigmaTemplate out = s;
    for (auto& g : out) g.digit = 1 - g.digit;
    return out;
}

std::vector<Vec3> default_base(const TypePresentation& tau) {
    std::vector<Vec3> lam;
    for (const auto& m : tau.mu) lam.push_back(m + kEta + kOne);
    return lam;
}

std::vector<GraphPoint> translate_template(const TypePresentation& tau, const std::vector<Vec3>& lam,
                                           const SigmaTemplate& tmpl) {
    ProductElt x;
    for (size_t j = 0; j < tau.f(); ++j) x.push_back(AffElt{tau.mu[j] + kEta - lam[j], tau.s[j]});
    std::vector<GraphPoint> out;
    for (const auto& g : power(tmpl, tau.f())) out.push_back(graph_act(x, g));
    return out;
}

bool jh_exact(const TypePresentation& tau) { return depth(tau.mu, tau.p) >= 2; }

std::vector<WeightPresentation> jh_set(const TypePresentation& tau, const std::vector<Vec3>& lam) {
    return jh_like(tau, lam, sigma0());
}

std::vector<WeightPresentation> jh_set(const TypePresentation& tau) { return jh_set(tau, default_base(tau)); }

std::vector<WeightPresentation> jh_outer(const TypePresentation& tau, const std::vector<Vec3>& lam) {
    return jh_like(tau, lam, sigma_out());
}

std::vector<WeightPresentation> jh_outer(const TypePresentation& tau) { return jh_outer(tau, default_base(tau)); }

std::vector<std::vector<Vec3>> herzig_outer_oracle(const TypePresentation& tau) {
    int d = depth(tau.mu, tau.p);
    if (d < 1) throw DepthError("type is not 1-generic (mu is " + std::to_string(d) + "-deep)");
    const size_t f = tau.f();
    const auto& reps = restricted_reps();
    std::set<std::vector<Vec3>> out;
    std::vector<int> idx(f, 0);
    while (true) {
        std::vector<Vec3> lam(f);
        for (size_t j = 0; j < f; ++j) {
            // omega_j = t_{mu+eta} s (w_h w_j)^{-1}(0); the dot action on embedding j uses w_{j+1}
            const AffElt& wj = reps[idx[j]];
            AffElt tw = AffElt{tau.mu[j] + kEta, tau.s[j]} * (w_h() * wj).inverse();
            Vec3 omega = tw(Vec3{0, 0, 0});
            lam[j] = p_dot(reps[idx[(j + 1) % f]], omega - kEta, tau.p);
        }
        out.insert(canonical_highest_weight(lam, tau.p));
        size_t k = 0;
        while (k < f && ++idx[k] == 6) idx[k++] = 0;
        if (k == f) break;
    }
    return {out.begin(), out.end()};
}

std::vector<WeightPresentation> w_question(const TypePresentation& tau, const std::vector<Vec3>& lam) {
    int d = depth(tau.mu, tau.p);
    if (d < 2) throw DepthError("type is not 2-generic (mu is " + std::to_string(d) + "-deep)");
    check_lattice(tau, lam);
    return realize(tau, lam, flip_digits(sigma0()), false);
}

std::vector<WeightPresentation> w_question(const TypePresentation& tau) { return w_question(tau, default_base(tau)); }

bool covers(const WeightPresentation& a, const WeightPresentation& b) {
    if (a.f() != b.f() || a.p != b.p || zeta_of(a) != zeta_of(b))
        throw CompatibilityError("weights have no common graph coordinate system");
    auto ca = canonical(a), cb = canonical(b);
    for (size_t j = 0; j < a.f(); ++j) {
        if (ca.omega[j] != cb.omega[j]) return false;
        if (alcove_digit(cb.w1[j]) > alcove_digit(ca.w1[j])) return false;
    }
    return true;
}

} // namespace serrewt
