#include "serrewt/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

LaurentPoly truncate(const LaurentPoly& a, int n) {
    LaurentPoly r(a.modulus());
    for (auto& [e, c] : a.terms())
        if (e < n) r.set(e, c);
    return r;
}

// 3*val + k - i; the Iwahori is where this is >= 0 in every entry
int mval(const LaurentPoly& a, int i, int k) {
    if (a.is_zero()) return INT_MAX;
    return 3 * a.valuation() + k - i;
}

int min_valuation(const LaurentMatrix& A) {
    int m = INT_MAX;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            if (!A.at(i, k).is_zero()) m = std::min(m, A.at(i, k).valuation());
    return m;
}

struct Eliminator {
    LaurentMatrix A, L, R;
    Int p;
    int n;      // precision of A
    int n_side; // precision of L and R

    void row_op(int dst, int src, const LaurentPoly& g) {
        for (int k = 0; k < 3; ++k) {
            A.at(dst, k) = truncate(A.at(dst, k) + g * A.at(src, k), n);
            L.at(dst, k) = truncate(L.at(dst, k) + g * L.at(src, k), n_side);
        }
    }
    void col_op(int dst, int src, const LaurentPoly& f) {
        for (int i = 0; i < 3; ++i) {
            A.at(i, dst) = truncate(A.at(i, dst) + A.at(i, src) * f, n);
            R.at(i, dst) = truncate(R.at(i, dst) + R.at(i, src) * f, n_side);
        }
    }
    // -lead(x)/lead(piv) as a monomial
    LaurentPoly canceller(const LaurentPoly& x, const LaurentPoly& piv) const {
        int e = x.valuation() - piv.valuation();
        Int c = mod_norm(-x.coeff(x.valuation()) * mod_inv(piv.coeff(piv.valuation()), p), p);
        return LaurentPoly::monomial(c, e, p);
    }
};

} // namespace

bool in_iwahori(const LaurentMatrix& m) {
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const auto& a = m.at(i, k);
            if (a.is_zero()) {
                if (i == k) return false;
                continue;
            }
            if (i == k && (a.valuation() != 0)) return false;
            if (mval(a, i, k) < 0) return false;
        }
    return true;
}

ShapeResult iwahori_decompose(const LaurentMatrix& A0, bool require_adapted) {
    Int p = A0.modulus();
    if (p == 0) throw DecompositionError("iwahori_decompose works over F_p; reduce the matrix first");
    LaurentMatrix A = A0.reduce(p);
    LaurentPoly d = A.det();
    if (d.is_zero()) throw SingularMatrixError("determinant vanishes");
    if (require_adapted) {
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                const auto& a = A.at(i, k);
                if (a.is_zero()) continue;
                if (a.valuation() < (i > k ? 1 : 0))
                    throw NotIwahoriAdapted("entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                            ") is not upper triangular mod v");
            }
    }
    int minv = min_valuation(A);
    int prec = d.valuation() - 2 * minv + 2;
    Eliminator el{A, LaurentMatrix::identity(p), LaurentMatrix::identity(p), p, prec, prec - minv};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) el.A.at(i, k) = truncate(el.A.at(i, k), prec);

    bool row_used[3] = {false, false, false}, col_used[3] = {false, false, false};
    AffElt out;
    for (int step = 0; step < 3; ++step) {
        int best = INT_MAX, bi = -1, bk = -1;
        for (int i = 0; i < 3; ++i) {
            if (row_used[i]) continue;
            for (int k = 0; k < 3; ++k) {
                if (col_used[k]) continue;
                int m = mval(el.A.at(i, k), i, k);
                if (m < best) best = m, bi = i, bk = k;
            }
        }
        if (bi < 0) throw DecompositionError("no pivot left; precision " + std::to_string(prec) + " too small");
        for (int l = 0; l < 3; ++l) {
            if (l == bk || col_used[l]) continue;
            while (!el.A.at(bi, l).is_zero()) el.col_op(l, bk, el.canceller(el.A.at(bi, l), el.A.at(bi, bk)));
        }
        for (int r = 0; r < 3; ++r) {
            if (r == bi || row_used[r]) continue;
            while (!el.A.at(r, bk).is_zero()) el.row_op(r, bi, el.canceller(el.A.at(r, bk), el.A.at(bi, bk)));
        }
        row_used[bi] = col_used[bk] = true;
        out.w.img[bk] = std::uint8_t(bi);
        out.nu[bi] = el.A.at(bi, bk).valuation();
    }
    ShapeResult res{out, out.nu, el.L, el.R, el.A, prec};
    if (!verify_shape(A, res)) throw VerificationFailure("re-multiplication does not reproduce the monomial form");
    return res;
}

bool verify_shape(const LaurentMatrix& A0, const ShapeResult& r) {
    Int p = A0.modulus();
    LaurentMatrix A = A0.reduce(p);
    if (!in_iwahori(r.left) || !in_iwahori(r.right)) return false;
    LaurentMatrix M = (r.left * A * r.right).reduce(p);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            LaurentPoly e = truncate(M.at(i, k), r.precision);
            if (!(e == truncate(r.reduced.at(i, k), r.precision))) return false;
            bool on = r.elt.w[k] == i;
            if (on != !e.is_zero()) return false;
            if (on && e.valuation() != r.elt.nu[i]) return false;
        }
    return true;
}

LaurentMatrix random_iwahori(std::mt19937_64& rng, Int p, int max_degree) {
    std::uniform_int_distribution<Int> coef(0, p - 1), unit(1, p - 1);
    LaurentMatrix m(p);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            LaurentPoly a(p);
            int lo = i > k ? 1 : 0;
            for (int e = lo; e <= max_degree; ++e) a.set(e, coef(rng));
            if (i == k) a.set(0, unit(rng));
            m.at(i, k) = a;
        }
    return m;
}

LaurentMatrix torus_limit(const LaurentMatrix& A, const Cocharacter& c) {
    LaurentMatrix out(A.modulus());
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (auto& [e, x] : A.at(i, k).terms()) {
                Int w = c.left[i] + c.right[k] + Int(c.rotation) * e;
                if (w < 0) throw DecompositionError("torus limit diverges");
                if (w == 0) out.at(i, k).set(e, x);
            }
    return out;
}

std::vector<Cocharacter> degenerating_cocharacters(const LaurentMatrix& A, int range) {
    std::vector<Cocharacter> out;
    std::vector<int> vals;
    for (int x = -range; x <= range; ++x) vals.push_back(x);
    for (int b = 0; b <= range; ++b)
        for (int l0 : vals)
            for (int l1 : vals)
                for (int l2 : vals)
                    for (int r0 : vals)
                        for (int r1 : vals) {
                            Cocharacter c{{l0, l1, l2}, {r0, r1, 0}, b};
                            bool ok = true;
                            for (int i = 0; i < 3 && ok; ++i)
                                for (int k = 0; k < 3 && ok; ++k)
                                    for (auto& [e, x] : A.at(i, k).terms())
                                        if (c.left[i] + c.right[k] + Int(b) * e < 0) {
                                            ok = false;
                                            break;
                                        }
                            if (!ok) continue;
                            LaurentMatrix l = torus_limit(A, c);
                            if (!(l == A) && !l.det().is_zero()) out.push_back(c);
                        }
    return out;
}

ProductElt shape_fixed(const ProductElt& y, const ProductElt& w_tau) {
    if (y.size() != w_tau.size()) throw CompatibilityError("embedding counts differ");
    return compose(inverse(w_tau), y);
}

bool in_admissible(const ProductElt& shape, Convention c) {
    for (auto& x : shape)
        if (!in_admissible(x, c)) return false;
    return true;
}

bool semicont_leq(const ProductElt& a, const ProductElt& b, Convention c) {
    if (a.size() != b.size()) throw CompatibilityError("embedding counts differ");
    for (size_t j = 0; j < a.size(); ++j)
        if (!bruhat_leq(a[j], b[j], c)) return false;
    return true;
}

// ---- charts

namespace {

struct RowData {
    std::string name;
    std::vector<std::string> vars;
    std::array<const char*, 9> entries;
    std::vector<const char*> relations;
};

const std::vector<RowData>& rows() {
    static const std::vector<RowData> r{
        {"abag",
         {"c11s", "c21", "c31", "c31p", "c22s", "c32", "c33s"},
         {"(v+p)^2 c11s", "0", "0",
          "v(v+p) c21", "(v+p) c22s", "0",
          "v(c31 + (v+p) c31p)", "v c32", "c33s"},
         {}},
        {"bgag",
         {"c11s", "c12", "c22s", "c31", "c32", "c32p", "c33s"},
         {"(v+p) c11s", "(v+p) c12", "0",
          "0", "(v+p)^2 c22s", "0",
          "v c31", "v(c32 + (v+p) c32p)", "c33s"},
         {}},
        {"bag",
         {"c11", "c12s", "c21s", "c22", "c31", "c31p", "c32", "c33s"},
         {"(v+p) c11", "(v+p) c12s", "0",
          "v(v+p) c21s", "(v+p) c22", "0",
          "v(c31 + (v+p) c31p)", "v c32", "c33s"},
         {"c11 c22 + p c12s c21s"}},
        {"abg",
         {"c11s", "c21", "c21p", "c22", "c23s", "c31p", "c32s", "c33"},
         {"(v+p)^2 c11s", "0", "0",
          "v(c21 + (v+p) c21p)", "c22", "c23s",
          "v(c21 c33 c23s^-1 + (v+p) c31p)", "v c32s", "c33"},
         {"c22 c33 + p c32s c23s"}},
        {"aba",
         {"c11", "c12", "c13", "c13s", "c22s", "c23", "c31s", "c32", "c33", "c33p"},
         {"c11", "c11 c32 c31s^-1", "c13 + (v+p) c13s",
          "0", "(v+p) c22s", "(v+p) c23",
          "v c31s", "v c32", "c33 + (v+p) c33p"},
         {"c11 c32 - c12 c31s", "c11 c33 + p c13 c31s", "c11 c33p - c13 c31s + p c13s c31s"}},
        {"ab",
         {"c12", "c13", "c13s", "c21s", "c22", "c23", "c23p", "c31", "c32s", "c33p"},
         {"c31 c12 c32s^-1", "c12", "c13 + (v+p) c13s",
          "v c21s", "c22", "c23 + (v+p) c23p",
          "v c31", "v c32s", "c31 c23 c21s^-1 + (v+p) c33p"},
         {"c22 c31 + p c21s c32s", "c12 c23 - c22 c13",
          "c21s c32s c13 - p c21s c32s c13s - c33p c21s c12"}},
        {"ba",
         {"c11", "c12s", "c13", "c22p", "c23s", "c31s", "c32", "c33", "c33p"},
         {"c11", "c31s^-1 c11 c32 + (v+p) c12s", "c13",
          "0", "(v+p) c22p", "(v+p) c23s",
          "c31s v", "c32 v", "c33 + (v+p) c33p"},
         {"c11 c33 + p c31s c13", "c22p (c11 c33p - c13 c31s) - p c23s c12s c31s"}},
        {"a",
         {"c11", "c12", "c12s", "c13", "c21s", "c22", "c22p", "c23", "c31", "c32", "c33", "c33s"},
         {"c11", "c12 + (v+p) c12s", "c13",
          "c21s v", "c22 + (v+p) c22p", "c23",
          "c31 v", "c32 v", "c33 + (v+p) c33s"},
         {"c11 c22 + p c12 c21s", "c11 c23 + p c13 c21s", "c12 c23 - c13 c22", "c11 c32 - c31 c12",
          "c11 c33 + p c31 c13", "c12 c33 + p c32 c13", "p c21s c32 + c22 c31", "c21s c33 - c23 c31",
          "c22 c33 + p c32 c23",
          "c11 c22p c33s + c13 c21s c32 - c13 c22p c31 - c12 c21s c33s + p c21s c12s c33s"}},
        {"id",
         {"c11", "c11s", "c12", "c13", "c21", "c22", "c22s", "c23", "c31", "c32", "c33", "c33s"},
         {"c11 + c11s (v+p)", "c12", "c13",
          "v c21", "c22 + c22s (v+p)", "c23",
          "v c31", "v c32", "c33 + c33s (v+p)"},
         {"c11 c22 + p c12 c21", "c11 c23 + p c13 c21", "c12 c23 - c13 c22", "c11 c32 - c31 c12",
          "c11 c33 + p c31 c13", "c12 c33 + p c32 c13", "p c21 c32 + c22 c31", "c21 c33 - c23 c31",
          "c22 c33 + p c32 c23",
          "c11 c22s c33s + c22 c33s c11s + c33 c11s c22s - c11s c23 c32 - c22s c13 c31 - c33s c12 c21 "
          "+ c21 c13 c32"}},
    };
    return r;
}

const RowData& row_data(const std::string& name) {
    for (auto& r : rows())
        if (r.name == name) return r;
    throw UnknownRow("no chart row named " + name);
}

AffElt delta_pow(int k) {
    k = ((k % 3) + 3) % 3;
    AffElt r;
    for (int i = 0; i < k; ++i) r = delta() * r;
    return r;
}

std::vector<std::string> shifted(const std::vector<std::string>& vars, int shift) {
    std::vector<std::string> out;
    for (auto& v : vars) out.push_back(shift_name(v, shift));
    return out;
}

// polynomial with the same exponents in another ring of equal size
Poly rebind(const Poly& a, const RingPtr& ring) {
    Poly r(ring);
    for (auto& [m, c] : a.terms()) r.add_term(m, c);
    return r;
}

} // namespace

const std::vector<std::string>& table_rows() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto& r : rows()) n.push_back(r.name);
        return n;
    }();
    return names;
}

AffElt row_element(const std::string& row) {
    row_data(row);
    AffElt x;
    if (row == "id") return x;
    for (char ch : row) {
        switch (ch) {
        case 'a': x = x * gen_alpha(); break;
        case 'b': x = x * gen_beta(); break;
        case 'g': x = x * gen_gamma(); break;
        default: throw UnknownRow("bad letter in row name " + row);
        }
    }
    return x;
}

AffElt delta() { return AffElt{{-1, 0, 0}, perm_cyc()}; }

ChartRef chart_of(const AffElt& z) {
    AffElt zt = z * AffElt::translation(-kOne);
    for (int k = 0; k < 3; ++k)
        for (auto& r : rows())
            if (delta_pow(k) * row_element(r.name) * delta_pow(k).inverse() == zt) return {r.name, k};
    throw UnknownRow("no chart for " + z.str());
}

AffElt chart_element(const ChartRef& c) {
    return delta_pow(c.shift) * row_element(c.row) * delta_pow(c.shift).inverse() * t_one();
}

std::vector<ChartRef> all_charts() {
    std::vector<ChartRef> out;
    std::vector<AffElt> seen;
    for (auto& r : rows())
        for (int k = 0; k < 3; ++k) {
            AffElt z = chart_element({r.name, k});
            if (std::find(seen.begin(), seen.end(), z) != seen.end()) continue;
            seen.push_back(z);
            out.push_back({r.name, k});
        }
    return out;
}

std::string shift_name(const std::string& var, int shift) {
    if (var.size() < 3 || (var[0] != 'c' && var[0] != 'd') || !std::isdigit(static_cast<unsigned char>(var[1])) ||
        !std::isdigit(static_cast<unsigned char>(var[2])))
        throw MissingVariable("not a chart coordinate: " + var);
    shift = ((shift % 3) + 3) % 3;
    auto bump = [&](char d) { return char('1' + (d - '1' + shift) % 3); };
    std::string out = var;
    out[1] = bump(var[1]);
    out[2] = bump(var[2]);
    return out;
}

std::vector<std::string> chart_variables(const ChartRef& c) { return shifted(row_data(c.row).vars, c.shift); }

bool is_starred(const std::string& var) { return !var.empty() && var.back() == 's'; }

static RingPtr row_ring(const RowData& r, int shift, Int p, bool integral, bool with_v) {
    auto vars = shifted(r.vars, shift);
    if (with_v) vars.push_back("v");
    if (integral) vars.push_back("p");
    return make_ring(vars, integral ? 0 : p);
}

std::vector<Poly> chart_relations(const ChartRef& c, Int p, bool integral) {
    const RowData& r = row_data(c.row);
    RingPtr base = row_ring(r, 0, p, integral, false);
    RingPtr target = row_ring(r, c.shift, p, integral, false);
    std::map<std::string, Int> consts;
    if (!integral) consts["p"] = p;
    std::vector<Poly> out;
    for (auto* g : r.relations) out.push_back(rebind(parse_poly(g, base, consts), target));
    return out;
}

std::array<std::array<Poly, 3>, 3> chart_matrix_symbolic(const ChartRef& c, Int p, bool integral) {
    const RowData& r = row_data(c.row);
    RingPtr base = row_ring(r, 0, p, integral, true);
    RingPtr target = row_ring(r, c.shift, p, integral, true);
    std::map<std::string, Int> consts;
    if (!integral) consts["p"] = p;
    std::array<std::array<Poly, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) m[i][k] = rebind(parse_poly(r.entries[3 * i + k], base, consts), target);
    // D A D^-1 with D = to_matrix(delta^shift): entry (s(i), s(k)) = v^(nu_s(i) - nu_s(k)) A_ik
    AffElt d = delta_pow(c.shift);
    int vi = target->index("v");
    std::array<std::array<Poly, 3>, 3> out;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Monomial mono(target->size(), 0);
            mono[vi] = int(d.nu[d.w[i]] - d.nu[d.w[k]]);
            out[d.w[i]][d.w[k]] = m[i][k].times_term(mono, 1);
        }
    return out;
}

LaurentMatrix universal_matrix(const AffElt& z, const std::map<std::string, Int>& assignment, Int p, bool integral) {
    ChartRef c = chart_of(z);
    auto vars = chart_variables(c);
    std::map<std::string, Int> values;
    for (auto& v : vars) {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw MissingVariable("no value for " + v);
        Int x = integral ? it->second : mod_norm(it->second, p);
        if (is_starred(v) && mod_norm(x, p) == 0) throw RelationViolation("unit " + v + " vanishes mod p");
        values[v] = x;
    }
    for (auto& g : chart_relations(c, p, false)) {
        std::map<std::string, Int> red;
        for (auto& [k, x] : values) red[k] = mod_norm(x, p);
        if (g.eval(red) != 0) throw RelationViolation("relation " + g.str() + " fails");
    }
    if (integral) values["p"] = p;
    auto sym = chart_matrix_symbolic(c, p, integral);
    LaurentMatrix A(integral ? 0 : p);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) A.at(i, k) = sym[i][k].eval_laurent(values, "v");
    return A;
}

std::map<std::string, Int> random_assignment(const ChartRef& c, Int p, std::mt19937_64& rng) {
    auto vars = chart_variables(c);
    auto rels = chart_relations(c, p, false);
    RingPtr ring = rels.empty() ? nullptr : rels.front().ring();
    std::uniform_int_distribution<Int> any(0, p - 1), unit(1, p - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::map<std::string, Int> a;
        for (auto& v : vars) a[v] = is_starred(v) ? unit(rng) : any(rng);
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<size_t> bad;
            for (size_t g = 0; g < rels.size(); ++g)
                if (rels[g].eval(a) != 0) bad.push_back(g);
            if (bad.empty()) return a;
            const Poly& g = rels[bad[std::uniform_int_distribution<size_t>(0, bad.size() - 1)(rng)]];
            // solve for a variable that enters linearly, else kill a factor of some term
            std::vector<std::pair<std::string, Int>> solutions;
            for (auto& x : g.used_variables()) {
                if (is_starred(x)) continue;
                int xi = ring->index(x);
                bool linear = true;
                for (auto& [m, cf] : g.terms())
                    if (m[xi] > 1) linear = false;
                if (!linear) continue;
                std::map<std::string, Int> a0 = a, a1 = a;
                a0[x] = 0;
                a1[x] = 1;
                Int r0 = g.eval(a0), h = mod_norm(g.eval(a1) - r0, p);
                if (h == 0) continue;
                solutions.push_back({x, mod_norm(-r0 * mod_inv(h, p), p)});
            }
            if (!solutions.empty() && std::uniform_int_distribution<int>(0, 9)(rng) < 8) {
                auto& [x, val] = solutions[std::uniform_int_distribution<size_t>(0, solutions.size() - 1)(rng)];
                a[x] = val;
                continue;
            }
            std::vector<std::string> killable;
            for (auto& [m, cf] : g.terms()) {
                Int t = Poly::term(ring, m, cf).eval(a);
                if (t == 0) continue;
                for (size_t i = 0; i < m.size(); ++i)
                    if (m[i] > 0 && !is_starred(ring->vars[i])) killable.push_back(ring->vars[i]);
            }
            if (killable.empty()) break;
            a[killable[std::uniform_int_distribution<size_t>(0, killable.size() - 1)(rng)]] = 0;
        }
    }
    throw DecompositionError("could not sample a point of chart " + c.row);
}

} // namespace serrewt
