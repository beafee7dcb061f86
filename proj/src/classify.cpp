#include "serrewt/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

Perm simple(int s) { return s == 0 ? perm_s1() : perm_s2(); }

GraphCoord lit(Int a, Int b, int digit) { return {lambda_w(a * kEps1 + b * kEps2), digit}; }

SigmaTemplate sorted(SigmaTemplate s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

SigmaTemplate raise_digits(const SigmaTemplate& s) {
    SigmaTemplate out = s;
    for (const auto& g : s) out.push_back({g.eps, 1});
    return sorted(out);
}

void require_deep(const Vec3& v, Int p, const char* what) {
    if (depth(v, p) < 2) throw DepthError(std::string(what) + " = " + str(v) + " is not 2-deep");
}

std::vector<GraphPoint> product(const std::vector<SigmaTemplate>& factors) {
    std::vector<GraphPoint> out{GraphPoint{}};
    for (const auto& fac : factors) {
        std::vector<GraphPoint> next;
        for (const auto& g : out)
            for (const auto& e : fac) {
                GraphPoint h = g;
                h.push_back(e);
                next.push_back(h);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

bool SpecPair::operator<(const SpecPair& o) const {
    if (y != o.y) return y < o.y;
    return canonical(weight) < canonical(o.weight);
}

bool SpecPair::operator==(const SpecPair& o) const { return y == o.y && equivalent(weight, o.weight); }

std::string str(const SpecPair& sp) {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < sp.f(); ++j) os << (j ? "; " : "") << sp.y[j].str();
    os << ", " << str(sp.weight) << ")";
    return os.str();
}

int edge_index(const Perm& theta, int s) {
    static const std::map<std::pair<int, int>, int> edges = [] {
        std::set<std::pair<int, int>> e;
        for (const auto& t : Perm::all())
            for (int i : {0, 1}) {
                int a = t.index(), b = (t * simple(i)).index();
                e.insert({std::min(a, b), std::max(a, b)});
            }
        std::map<std::pair<int, int>, int> out;
        int k = 0;
        for (const auto& x : e) out[x] = k++;
        return out;
    }();
    int a = theta.index(), b = (theta * simple(s)).index();
    return edges.at({std::min(a, b), std::max(a, b)});
}

BranchOracle edge_oracle(const std::vector<unsigned>& masks) {
    return [masks](const SpecPair& sp, size_t j, int s) {
        int e = edge_index(theta(sp)[j], s);
        return (masks.at(j) >> e) & 1u ? Branch::new_weight : Branch::new_specialization;
    };
}

BranchOracle constant_oracle(Branch b) {
    return [b](const SpecPair&, size_t, int) { return b; };
}

SpecPair make_pair(const ProductElt& y, const ProductElt& w_tilde, Int p) {
    if (y.size() != w_tilde.size()) throw std::invalid_argument("embedding count mismatch: spec pair");
    SpecPair sp{y, {w_tilde, {}, p}};
    for (size_t j = 0; j < y.size(); ++j) sp.weight.omega.push_back((y[j] * w_tilde[j].inverse())(Vec3{0, 0, 0}));
    return sp;
}

std::vector<SpecPair> sp_fixed(const ProductElt& x, Int p) {
    const size_t f = x.size();
    const auto& reps = restricted_reps();
    std::vector<std::vector<AffElt>> ok(f);
    for (size_t j = 0; j < f; ++j)
        for (const auto& r : reps)
            if (depth((x[j] * r.inverse())(Vec3{0, 0, 0}) - kEta, p) >= 2) ok[j].push_back(r);
    std::vector<SpecPair> out;
    std::vector<size_t> idx(f, 0);
    for (size_t j = 0; j < f; ++j)
        if (ok[j].empty()) return out;
    while (true) {
        ProductElt w;
        for (size_t j = 0; j < f; ++j) w.push_back(ok[j][idx[j]]);
        out.push_back(make_pair(x, w, p));
        size_t k = 0;
        while (k < f && ++idx[k] == ok[k].size()) idx[k++] = 0;
        if (k == f) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

TypePresentation type_of_point(const ProductElt& x, Int p) {
    TypePresentation tau;
    tau.p = p;
    for (const auto& xj : x) {
        tau.s.push_back(xj.w);
        tau.mu.push_back(xj.nu - kEta - kOne);
    }
    return tau;
}

std::vector<WeightPresentation> wg_fixed(const ProductElt& x, Int p) { return w_question(type_of_point(x, p)); }

std::vector<WeightPresentation> wg_fixed_oracle(const ProductElt& x, Int p) {
    const size_t f = x.size();
    // per embedding: (w~, w~2) with w~2 up-linked to w~, both of the same class
    std::vector<std::vector<std::pair<AffElt, Vec3>>> opts(f);
    for (size_t j = 0; j < f; ++j)
        for (Int c = 0; c < 3; ++c)
            for (int a : {0, 1})
                for (int a2 : {0, 1}) {
                    if (a2 > a) continue;
                    AffElt w = restricted_element(a, c), w2 = restricted_element(a2, c);
                    Vec3 om = (x[j] * w2.inverse())(Vec3{0, 0, 0});
                    if (depth(om - kEta, p) >= 2) opts[j].push_back({w, om});
                }
    std::set<WeightPresentation> out;
    std::vector<size_t> idx(f, 0);
    for (size_t j = 0; j < f; ++j)
        if (opts[j].empty()) return {};
    while (true) {
        WeightPresentation w;
        w.p = p;
        for (size_t j = 0; j < f; ++j) {
            w.w1.push_back(opts[j][idx[j]].first);
            w.omega.push_back(opts[j][idx[j]].second);
        }
        out.insert(canonical(w));
        size_t k = 0;
        while (k < f && ++idx[k] == opts[k].size()) idx[k++] = 0;
        if (k == f) break;
    }
    return {out.begin(), out.end()};
}

AffElt tilde_sw(const AffElt& w_tilde, int s) {
    Perm target = simple(s) * w_tilde.w;
    for (const auto& r : restricted_reps())
        if (r.w == target) return r;
    throw std::logic_error("no restricted element with finite part " + target.str());
}

std::vector<Perm> theta(const SpecPair& sp) {
    std::vector<Perm> out;
    for (size_t j = 0; j < sp.f(); ++j) out.push_back((sp.y[j] * sp.weight.w1[j].inverse()).w);
    return out;
}

SpecPair simple_walk(const SpecPair& sp, size_t j, int s, const BranchOracle& oracle) {
    const Int p = sp.weight.p;
    const AffElt& y = sp.y.at(j);
    const AffElt& wt = sp.weight.w1.at(j);
    const AffElt sr = AffElt::finite(simple(s));
    const AffElt sw = tilde_sw(wt, s);
    const Vec3 zero{0, 0, 0};

    require_deep((y * wt.inverse() * sr * AffElt::translation(-kEta) * wt)(zero) - kEta, p, "y w~^-1 s t_-eta w~(0) - eta");
    require_deep((y * sw.inverse())(zero) - kEta, p, "y sw~^-1(0) - eta");
    require_deep(y(-(simple(s) * wt.w).inverse()(kEta)) - kEta, p, "y t_-(sw)^-1(eta)(0) - eta");

    ProductElt ny = sp.y, nw = sp.weight.w1;
    if (oracle(sp, j, s) == Branch::new_specialization)
        ny[j] = y * wt.inverse() * sr * wt;
    else
        nw[j] = sw;
    return make_pair(ny, nw, p);
}

std::vector<SpecPair> close_sp(const SpecPair& seed, const BranchOracle& oracle) {
    std::map<std::vector<Perm>, SpecPair> by_theta;
    std::vector<SpecPair> stack{seed};
    while (!stack.empty()) {
        SpecPair sp = stack.back();
        stack.pop_back();
        auto th = theta(sp);
        auto it = by_theta.find(th);
        if (it != by_theta.end()) {
            if (!(it->second == sp))
                throw ConsistencyError("theta is not injective: " + str(it->second) + " and " + str(sp));
            continue;
        }
        by_theta.emplace(th, sp);
        for (size_t j = 0; j < sp.f(); ++j)
            for (int s : {0, 1}) stack.push_back(simple_walk(sp, j, s, oracle));
    }
    std::vector<SpecPair> out;
    for (auto& [th, sp] : by_theta) out.push_back(sp);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProductElt> specializations(const std::vector<SpecPair>& sps) {
    std::set<ProductElt> out;
    for (const auto& sp : sps) out.insert(sp.y);
    return {out.begin(), out.end()};
}

std::vector<WeightPresentation> obvious_weights(const std::vector<SpecPair>& sps) {
    std::set<WeightPresentation> out;
    for (const auto& sp : sps) out.insert(canonical(sp.weight));
    return {out.begin(), out.end()};
}

std::vector<WeightPresentation> wg_upper_bound(const std::vector<SpecPair>& sps) {
    if (sps.empty()) return {};
    const size_t f = sps[0].f();
    const Int p = sps[0].weight.p;
    auto ys = specializations(sps);
    std::vector<std::vector<WeightPresentation>> per(f);
    for (size_t j = 0; j < f; ++j) {
        std::set<WeightPresentation> acc;
        bool first = true;
        for (const auto& y : ys) {
            auto wg = wg_fixed({y[j]}, p);
            std::set<WeightPresentation> cur(wg.begin(), wg.end());
            if (first) {
                acc = std::move(cur);
                first = false;
            } else {
                std::set<WeightPresentation> keep;
                for (const auto& w : acc)
                    if (cur.count(w)) keep.insert(w);
                acc = std::move(keep);
            }
        }
        per[j].assign(acc.begin(), acc.end());
    }
    std::vector<WeightPresentation> out{WeightPresentation{{}, {}, p}};
    for (size_t j = 0; j < f; ++j) {
        std::vector<WeightPresentation> next;
        for (const auto& w : out)
            for (const auto& v : per[j]) {
                WeightPresentation u = w;
                u.w1.push_back(v.w1[0]);
                u.omega.push_back(v.omega[0]);
                next.push_back(u);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const SigmaTemplate& case_obv(int case_id) {
    static const std::array<SigmaTemplate, 6> lists{
        sorted({lit(0, 0, 0)}),
        sorted({lit(1, -1, 1)}),
        sorted({lit(0, 0, 0), lit(1, -1, 1)}),
        sorted({lit(0, 0, 0), lit(1, -1, 1), lit(-1, 1, 1)}),
        sorted({lit(0, 0, 1), lit(1, 0, 0), lit(0, 1, 0), lit(1, 1, 1)}),
        sorted({lit(0, 0, 0), lit(1, -1, 1), lit(-1, 1, 1), lit(1, 0, 0), lit(0, 1, 0), lit(1, 1, 1)}),
    };
    if (case_id < 1 || case_id > 6) throw std::invalid_argument("case id out of range");
    return lists[case_id - 1];
}

const SigmaTemplate& case_obv_bound(int case_id) {
    static const std::array<SigmaTemplate, 6> lists = [] {
        std::array<SigmaTemplate, 6> out;
        for (int k = 1; k <= 6; ++k) out[k - 1] = raise_digits(case_obv(k));
        return out;
    }();
    if (case_id < 1 || case_id > 6) throw std::invalid_argument("case id out of range");
    return lists[case_id - 1];
}

const SigmaTemplate& case_geometric(int case_id, bool upper_variant) {
    static const std::array<SigmaTemplate, 7> lists{
        sorted({lit(0, 0, 0)}),
        sorted({lit(1, -1, 1)}),
        sorted({lit(0, 0, 0), lit(1, -1, 1)}),
        sorted({lit(0, 0, 0), lit(1, -1, 1), lit(-1, 1, 1)}),
        sorted({lit(0, 0, 1), lit(1, 0, 0), lit(1, 0, 1), lit(0, 1, 0), lit(0, 1, 1), lit(1, 1, 1)}),
        sorted({lit(0, 0, 0), lit(0, 0, 1), lit(1, -1, 1), lit(-1, 1, 1), lit(1, 0, 0), lit(1, 0, 1), lit(0, 1, 0),
                lit(0, 1, 1), lit(1, 1, 1)}),
        sorted({lit(0, 0, 0), lit(0, 0, 1)}),
    };
    if (case_id < 1 || case_id > 6) throw std::invalid_argument("case id out of range");
    if (case_id == 1 && upper_variant) return lists[6];
    return lists[case_id - 1];
}

CaseDescriptor classify_case(const std::vector<SpecPair>& sps) {
    if (sps.empty()) throw ClassificationError("empty specialization set");
    auto weights = obvious_weights(sps);
    CaseDescriptor cd;
    cd.p = weights[0].p;
    cd.zeta = zeta_of(weights[0]);
    for (const auto& w : weights)
        if (zeta_of(w) != cd.zeta) throw ClassificationError("obvious weights carry different central characters");
    for (size_t j = 0; j < weights[0].f(); ++j) {
        Vec3 om0 = weights[0].omega[j];
        std::set<GraphCoord> gs;
        for (const auto& w : weights) gs.insert({lambda_w(w.omega[j] - om0), alcove_digit(w.w1[j])});
        const GraphCoord g0 = *gs.begin();

        struct Match {
            bool mirrored;
            Vec3 lam;
            int w;
            auto operator<=>(const Match&) const = default;
        };
        int found_case = 0;
        std::set<Match> found;
        for (int k = 1; k <= 6 && !found_case; ++k) {
            const auto& lst = case_obv(k);
            if (lst.size() != gs.size()) continue;
            for (bool mir : {false, true})
                for (const auto& w : Perm::all()) {
                    std::vector<GraphCoord> img;
                    for (const auto& e : lst) img.push_back({lambda_w((mir ? -1 : 1) * w(e.eps)), e.digit});
                    for (const auto& i : img) {
                        if (i.digit != g0.digit) continue;
                        Vec3 nu = lambda_w(g0.eps - i.eps);
                        std::set<GraphCoord> moved;
                        for (const auto& e : img) moved.insert({lambda_w(nu + e.eps), e.digit});
                        if (moved == gs) {
                            found.insert({mir, lambda_w(om0 + nu), w.index()});
                            found_case = k;
                        }
                    }
                }
        }
        if (!found_case) {
            std::ostringstream os;
            os << "embedding " << j << ": no case matches {";
            for (const auto& g : gs) os << " " << str(g);
            os << " }";
            throw ClassificationError(os.str());
        }
        const Match& m = *found.begin();
        cd.case_id.push_back(found_case);
        cd.w.push_back(Perm::from_index(m.w));
        cd.lam.push_back(m.lam);
        cd.mirrored.push_back(m.mirrored);
        cd.sub_variant.push_back(false);
    }
    return cd;
}

WeightPresentation place(const CaseDescriptor& cd, const GraphPoint& literal) {
    if (literal.size() != cd.f()) throw std::invalid_argument("embedding count mismatch: place");
    WeightPresentation w;
    w.p = cd.p;
    for (size_t j = 0; j < cd.f(); ++j) {
        Vec3 e = cd.w[j](literal[j].eps);
        if (cd.mirrored[j]) e = -e;
        Vec3 om = cd.lam[j] + lambda_w(e);
        w.w1.push_back(restricted_element(literal[j].digit, cd.zeta[j] + 3 - total_degree(om)));
        w.omega.push_back(om);
    }
    return canonical(w);
}

GraphPoint unplace(const CaseDescriptor& cd, const WeightPresentation& w) {
    if (w.f() != cd.f()) throw std::invalid_argument("embedding count mismatch: unplace");
    if (zeta_of(w) != cd.zeta) throw CompatibilityError("central character of " + str(w) + " does not match");
    GraphPoint g;
    for (size_t j = 0; j < cd.f(); ++j) {
        Vec3 d = lambda_w(w.omega[j] - cd.lam[j]);
        if (cd.mirrored[j]) d = -d;
        g.push_back({lambda_w(cd.w[j].inverse()(d)), alcove_digit(w.w1[j])});
    }
    return g;
}

std::vector<SigmaTemplate> sigma0_translates(int radius) {
    std::set<SigmaTemplate> out;
    for (Int a = -radius; a <= radius; ++a)
        for (Int b = -radius; b <= radius; ++b) {
            Int c = -a - b;
            if (c < -radius || c > radius) continue;
            for (const auto& s : Perm::all()) {
                AffElt x{{a, b, c}, s};
                SigmaTemplate t;
                for (const auto& g : sigma0()) t.push_back(graph_act(x, g));
                out.insert(sorted(t));
            }
        }
    return {out.begin(), out.end()};
}

namespace {

size_t meet(const SigmaTemplate& a, const SigmaTemplate& sorted_b) {
    size_t n = 0;
    for (const auto& g : a) n += std::binary_search(sorted_b.begin(), sorted_b.end(), g);
    return n;
}

} // namespace

bool never_three(const SigmaTemplate& sigma, int radius) {
    for (const auto& t : sigma0_translates(radius))
        if (meet(sigma, t) == 3) return false;
    return true;
}

SigmaTemplate sigma_g_from_bounds(const SigmaTemplate& lb_in, const SigmaTemplate& ub_in) {
    SigmaTemplate lb = sorted(lb_in), ub = sorted(ub_in);
    if (!std::includes(ub.begin(), ub.end(), lb.begin(), lb.end()))
        throw std::invalid_argument("lower bound is not contained in the upper bound");
    SigmaTemplate gap;
    std::set_difference(ub.begin(), ub.end(), lb.begin(), lb.end(), std::back_inserter(gap));
    static const auto translates = sigma0_translates(4);
    SigmaTemplate out = lb;
    for (const auto& e : gap) {
        bool in = false, out_ = false;
        for (const auto& t : translates) {
            if (meet(gap, t) != 1 || !std::binary_search(t.begin(), t.end(), e)) continue;
            size_t nl = meet(lb, t), nu = meet(ub, t);
            if (nl == 3)
                in = true;
            else if (nu == 3)
                out_ = true;
        }
        if (in == out_)
            throw ClassificationError(std::string(in ? "conflicting" : "no") + " discriminating translate for " + str(e));
        if (in) out.push_back(e);
    }
    return sorted(out);
}

std::vector<WeightPresentation> wg_from_case(const CaseDescriptor& cd) {
    std::vector<SigmaTemplate> factors;
    for (size_t j = 0; j < cd.f(); ++j) factors.push_back(case_geometric(cd.case_id[j], cd.sub_variant[j]));
    std::set<WeightPresentation> out;
    for (const auto& g : product(factors)) out.insert(place(cd, g));
    return {out.begin(), out.end()};
}

bool wg_exact(const CaseDescriptor& cd) { return cd.genericity >= 8; }

int spec_genericity(int m) {
    if (m < 6) throw DepthError("genericity bound needs a 6-generic representation, got " + std::to_string(m));
    return m - 4;
}

} // namespace serrewt
