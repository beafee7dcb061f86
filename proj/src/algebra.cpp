#include "serrewt/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "serrewt/shapes.hpp"
#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

void require_field(const RingPtr& r) {
    if (!r || r->modulus == 0) throw DecompositionError("ideal computations need a prime modulus");
}

} // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring_) g = g.to_ring(ring_);
        gens_.push_back(std::move(g));
    }
}

const std::vector<Poly>& IdealHandle::gb() const {
    if (!gb_) gb_ = std::make_shared<std::vector<Poly>>(groebner(ring_, gens_));
    return *gb_;
}

bool IdealHandle::is_unit() const {
    auto& g = gb();
    return g.size() == 1 && degree(g[0].lead_monomial()) == 0;
}

bool IdealHandle::is_zero() const { return gens_.empty(); }

std::string IdealHandle::str() const {
    std::string s = "(";
    for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    return s + ")";
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    Int p = f.modulus();
    Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
    Poly a = f.times_term(mono_div(l, f.lead_monomial()), mod_inv(f.lead_coeff(), p));
    Poly b = g.times_term(mono_div(l, g.lead_monomial()), mod_inv(g.lead_coeff(), p));
    return a - b;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    Poly rest = f, out(f.ring());
    Int p = f.modulus();
    while (!rest.is_zero()) {
        const Monomial lm = rest.lead_monomial();
        Int lc = rest.lead_coeff();
        const Poly* div = nullptr;
        for (auto& g : basis)
            if (divides(g.lead_monomial(), lm)) {
                div = &g;
                break;
            }
        if (!div) {
            out.add_term(lm, lc);
            rest.add_term(lm, -lc);
            continue;
        }
        Int k = mod_norm(lc * mod_inv(div->lead_coeff(), p), p);
        rest = rest - div->times_term(mono_div(lm, div->lead_monomial()), k);
    }
    return out;
}

std::vector<Poly> groebner(const RingPtr& ring, const std::vector<Poly>& gens) {
    require_field(ring);
    std::vector<Poly> G;
    for (auto& g : gens) {
        Poly h = g.ring() == ring ? g : g.to_ring(ring);
        if (h.has_negative_exponents()) throw DecompositionError("Laurent monomial in an ideal generator");
        h = normal_form(h, G);
        if (!h.is_zero()) G.push_back(h.monic());
    }
    std::set<std::pair<size_t, size_t>> pairs, done;
    for (size_t j = 0; j < G.size(); ++j)
        for (size_t i = 0; i < j; ++i) pairs.insert({i, j});
    GrevlexGreater order{ring->elim};
    while (!pairs.empty()) {
        // smallest lcm first
        auto best = pairs.begin();
        Monomial bl = lcm(G[best->first].lead_monomial(), G[best->second].lead_monomial());
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Monomial l = lcm(G[it->first].lead_monomial(), G[it->second].lead_monomial());
            if (order(bl, l)) bl = l, best = it;
        }
        auto [i, j] = *best;
        pairs.erase(best);
        done.insert({i, j});
        const Monomial& li = G[i].lead_monomial();
        const Monomial& lj = G[j].lead_monomial();
        if (coprime(li, lj)) continue;
        bool chain = false;
        for (size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j || !divides(G[k].lead_monomial(), bl)) continue;
            auto key = [](size_t x, size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
            if (done.count(key(i, k)) && done.count(key(j, k))) chain = true;
        }
        if (chain) continue;
        Poly h = normal_form(s_polynomial(G[i], G[j]), G);
        if (h.is_zero()) continue;
        G.push_back(h.monic());
        size_t n = G.size() - 1;
        for (size_t k = 0; k < n; ++k) pairs.insert({k, n});
    }
    // reduce
    std::vector<Poly> min;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t k = 0; k < G.size() && !redundant; ++k) {
            if (k == i) continue;
            if (divides(G[k].lead_monomial(), G[i].lead_monomial()) &&
                (G[k].lead_monomial() != G[i].lead_monomial() || k < i))
                redundant = true;
        }
        if (!redundant) min.push_back(G[i]);
    }
    std::vector<Poly> out;
    for (size_t i = 0; i < min.size(); ++i) {
        std::vector<Poly> others;
        for (size_t k = 0; k < min.size(); ++k)
            if (k != i) others.push_back(min[k]);
        Poly lead = Poly::term(ring, min[i].lead_monomial(), min[i].lead_coeff());
        Poly tail = min[i] - lead;
        out.push_back((lead + normal_form(tail, others)).monic());
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return order(b.lead_monomial(), a.lead_monomial()); });
    return out;
}

std::vector<Poly> groebner(const IdealHandle& I) { return I.gb(); }

Poly reduce(const Poly& f, const IdealHandle& I) {
    Poly g = f.ring() == I.ring() ? f : f.to_ring(I.ring());
    return normal_form(g, I.gb());
}

bool ideal_member(const Poly& f, const IdealHandle& I) { return reduce(f, I).is_zero(); }

bool buchberger_closed(const std::vector<Poly>& basis) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    return true;
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
    auto g = I.generators();
    for (auto& h : J.generators()) g.push_back(h.to_ring(I.ring()));
    return IdealHandle(I.ring(), g);
}

namespace {

// ring with one extra leading variable forming an elimination block
RingPtr with_aux(const RingPtr& r, const std::string& name) {
    std::vector<std::string> v{name};
    v.insert(v.end(), r->vars.begin(), r->vars.end());
    return make_ring(v, r->modulus, 1);
}

IdealHandle eliminate_aux(const RingPtr& ext, const std::vector<Poly>& gens, const RingPtr& base) {
    std::vector<Poly> out;
    for (auto& g : groebner(ext, gens)) {
        if (g.lead_monomial()[0] != 0) continue;
        Poly h(base);
        for (auto& [m, c] : g.terms()) h.add_term(Monomial(m.begin() + 1, m.end()), c);
        out.push_back(h);
    }
    return IdealHandle(base, out);
}

} // namespace

IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& J) {
    const RingPtr& base = I.ring();
    if (I.is_zero() || J.is_zero()) return IdealHandle(base, {});
    RingPtr ext = with_aux(base, "_t");
    Poly t = Poly::variable(ext, "_t"), one = Poly::constant(ext, 1);
    std::vector<Poly> gens;
    for (auto& f : I.gb()) gens.push_back(t * f.to_ring(ext));
    for (auto& g : J.gb()) gens.push_back((one - t) * g.to_ring(ext));
    return eliminate_aux(ext, gens, base);
}

IdealHandle ideal_intersect(const std::vector<IdealHandle>& Is) {
    if (Is.empty()) throw DecompositionError("empty intersection");
    IdealHandle acc = Is.front();
    for (size_t i = 1; i < Is.size(); ++i) acc = ideal_intersect(acc, Is[i]);
    return acc;
}

IdealHandle ideal_saturate(const IdealHandle& I, const Poly& f) {
    const RingPtr& base = I.ring();
    RingPtr ext = with_aux(base, "_u");
    Poly u = Poly::variable(ext, "_u"), one = Poly::constant(ext, 1);
    std::vector<Poly> gens;
    for (auto& g : I.generators()) gens.push_back(g.to_ring(ext));
    gens.push_back(one - u * f.to_ring(ext));
    return eliminate_aux(ext, gens, base);
}

bool ideal_contains(const IdealHandle& I, const IdealHandle& J) {
    for (auto& g : J.generators())
        if (!ideal_member(g, I)) return false;
    return true;
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

// ---- structure constants

int StructureConstants::genericity() const {
    Int g1 = mod_norm(a - b, p), g2 = mod_norm(b - c, p), g3 = mod_norm(c - a, p);
    return int(std::min({g1, g2, g3}));
}

std::map<std::string, Int> StructureConstants::constants() const {
    return {{"a", mod_norm(a, p)}, {"b", mod_norm(b, p)}, {"c", mod_norm(c, p)}, {"e", mod_norm(-1, p)}};
}

StructureConstants StructureConstants::shifted(int shift) const {
    StructureConstants r = *this;
    for (int i = 0; i < shift; ++i) r = {r.b, r.c, mod_norm(r.a + 1, p), p};
    return r;
}

std::string StructureConstants::str() const {
    std::ostringstream os;
    os << "(a,b,c)=(" << a << "," << b << "," << c << ") mod " << p;
    return os.str();
}

namespace {

// 5 once p >= 16; smaller primes get the largest gap that still fits
Int envelope_gap(Int p) { return std::min<Int>(5, (p - 1) / 3); }

} // namespace

bool sc_in_envelope(const StructureConstants& sc) {
    Int g = envelope_gap(sc.p);
    return sc.a > sc.b && sc.b > sc.c && sc.c >= 0 && sc.a < sc.p && sc.a - sc.b >= g && sc.b - sc.c >= g &&
           sc.a - sc.c <= sc.p - g - 1;
}

StructureConstants random_generic_sc(Int p, std::mt19937_64& rng) {
    if (envelope_gap(p) < 1) throw DepthError("no generic structure constants modulo " + std::to_string(p));
    std::uniform_int_distribution<Int> d(0, p - 1);
    for (;;) {
        StructureConstants sc{d(rng), d(rng), d(rng), p};
        if (sc_in_envelope(sc)) return sc;
    }
}

// ---- component tables

namespace {

struct Component {
    const char* label;
    std::vector<const char*> gens;
};

struct CompRow {
    const char* name;
    std::vector<const char*> vars;
    std::vector<const char*> relations; // special fiber relations and monodromy relations
    std::vector<Component> comps;
};

// constants a, b, c; e stands for e' = -1
const std::vector<CompRow>& comp_rows() {
    static const std::vector<CompRow> r{
        {"abag", {"c11s", "c21", "c22s", "d31", "c32", "c33s"}, {}, {{"e1+e2,0", {}}}},
        {"bgag",
         {"c11s", "c12", "c22s", "c31", "c32", "d32", "c33s"},
         {"(-1-b+c) c32 c11s - (-1-a+c) c12 c31"},
         {{"e2,1", {}}}},
        {"bag",
         {"c11", "c12s", "c21s", "c22", "c31", "d31", "c32", "c33s"},
         {"c11 c22", "(-1-a+c) c12s c31 - (-1-b+c) c32 c11"},
         {{"e1+e2,0", {"c11"}}, {"e2,1", {"c22"}}}},
        {"abg",
         {"c11s", "c21", "d21", "c22", "c23s", "d31", "c32s", "c33"},
         {"c22 c33", "(-1-a+c) c21 c32s + (b-c) d31 c22"},
         {{"e1+e2,0", {"c22"}}, {"e1,1", {"c33"}}}},
        {"aba",
         {"c11", "c13s", "c22s", "c23", "c31s", "c32", "d33"},
         {"c11 ((a-b) c23 c32 - (a-c) c22s d33)"},
         {{"0,0", {"c11"}}, {"0,1", {"(a-b) c23 c32 - (a-c) c22s d33"}}}},
        {"ab",
         {"c12", "c13", "c13s", "c21s", "c22", "c23", "d23", "c31", "c32s", "d33"},
         {"c22 c31", "c12 c23 - c22 c13", "c32s c13 - d33 c12", "c12 ((a-b) c31 d23 + (b-c) d33 c21s)",
          "(-1-a+c) c23 c32s - (-1-a+b) c22 d33"},
         {{"e1,1", {"c12", "c31"}},
          {"e1-e2,0", {"c31", "d33"}},
          {"0,0", {"c12", "c22"}},
          {"0,1", {"c22", "(b-c) d33 c21s + (a-b) c31 d23"}}}},
        {"ba",
         {"c11", "c12s", "c13", "d22", "c23s", "c31s", "c32", "c33", "d33"},
         {"c11 c33", "d22 (c11 d33 - c13 c31s)", "c11 ((a-b) c32 c23s - (a-c) d22 d33)",
          "(1+a-c) c33 c23s c12s - c13 ((a-b) c32 c23s - (a-c) d22 d33)"},
         {{"e2,1", {"d22", "c11"}},
          {"e2-e1,0", {"d22", "c32"}},
          {"0,0", {"c11", "c13"}},
          {"0,1", {"(a-b) c32 c23s - (a-c) d22 d33", "c13 c31s - c11 d33"}}}},
        {"a",
         {"c11", "c12", "c12s", "c13", "c21s", "c22", "d22", "c23", "c31", "c32", "c33s"},
         {"c11 c22", "c11 c23", "c12 c23 - c13 c22", "c11 c32 - c31 c12", "c12 c31 c23", "c22 c31",
          "c11 d22 c33s + c13 c21s c32 - c13 d22 c31 - c12 c21s c33s",
          "(a-b) c12 c33s c21s - (a-c) c13 (c32 c21s - d22 c31)",
          "(e-a+c) c23 (c32 c21s - d22 c31) - (e-a+b) c22 c33s c21s",
          "(c-1-a) c31 c23 c12s - (c-1-a) c31 c13 d22 + (c-1-b) c32 c13 c21s + c12 c33s c21s - c11 d22 c33s"},
         {{"e1,1", {"c11", "c13", "c31"}},
          {"e2,0", {"c11", "c31", "c32 c21s - d22 c31"}},
          {"e2,1", {"c11", "c32 c21s - d22 c31", "(a-b) c13 d22 + (-1-a+c) c23 c12s"}},
          {"e2-e1,0", {"c23", "d22", "c32 c21s - d22 c31"}},
          {"0,0", {"c11", "c13", "c23"}},
          {"0,1", {"c11 c33s - c13 c31", "c23", "(a-b) c31 d22 + (c-b) (c32 c21s - d22 c31)"}}}},
        {"id",
         {"c11", "c11s", "c12", "c13", "c21", "c22", "c22s", "c23", "c31", "c32", "c33", "c33s"},
         {"c11 c22", "c11 c23", "c12 c23 - c13 c22", "c11 c32 - c31 c12", "c11 c33", "c12 c33", "c22 c31",
          "c21 c33 - c23 c31", "c22 c33",
          "c11 c22s c33s + c22 c33s c11s + c33 c11s c22s - c11s c23 c32 - c22s c13 c31 - c33s c12 c21 + c21 c13 c32",
          "(c-1-a) c22s c33 + (b-1-a) c22 c33s - (c-1-a) c23 c32",
          "(a-b) c33s c11 + (c-1-b) c33 c11s - (a-b) c13 c31",
          "(a-b) c11s c22 + (a-c) c11 c22s - (a-b) c12 c21"},
         {{"e1,0", {"c11", "c22", "c33", "c21", "c31", "c23"}},
          {"e1,1", {"c31", "c33", "c11", "(-1-a+c) c32 c13 - (-1-a+b) c12 c33s", "c21 c13 - c23 c11s"}},
          {"e2,0", {"c11", "c22", "c33", "c12", "c31", "c32"}},
          {"e2,1", {"c12", "c22", "c11", "(a-b) c21 c13 - (-1-b+c) c23 c11s", "c21 c32 - c31 c22s"}},
          {"0,0", {"c11", "c22", "c33", "c13", "c23", "c12"}},
          {"0,1", {"c23", "c33", "c22", "(a-b) c21 c32 - (a-c) c31 c22s", "c32 c13 - c12 c33s"}}}},
    };
    return r;
}

const CompRow& comp_row(const std::string& name) {
    for (auto& r : comp_rows())
        if (name == r.name) return r;
    throw UnknownRow("no component row named " + name);
}

const Component& find_component(const CompRow& row, const std::string& label) {
    for (auto& c : row.comps)
        if (label == c.label) return c;
    throw UnlistedComponent("row " + std::string(row.name) + " lists no component " + label);
}

RingPtr comp_ring(const CompRow& row, const StructureConstants& sc, int shift) {
    std::vector<std::string> vars;
    for (auto* v : row.vars) vars.push_back(shift_name(v, shift));
    return make_ring(vars, sc.p);
}

// parse in the unshifted names, then move exponents onto the shifted ring
Poly parse_shifted(const char* text, const CompRow& row, const RingPtr& ring, const StructureConstants& sc,
                   int shift) {
    std::vector<std::string> vars(row.vars.begin(), row.vars.end());
    RingPtr base = make_ring(vars, sc.p);
    Poly f = parse_poly(text, base, sc.shifted(shift).constants());
    Poly out(ring);
    for (auto& [m, c] : f.terms()) out.add_term(m, c);
    return out;
}

std::vector<Poly> parse_list(const std::vector<const char*>& texts, const CompRow& row, const RingPtr& ring,
                             const StructureConstants& sc, int shift) {
    std::vector<Poly> out;
    for (auto* t : texts) out.push_back(parse_shifted(t, row, ring, sc, shift));
    return out;
}

} // namespace

const std::vector<std::string>& component_rows() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto& r : comp_rows()) n.push_back(r.name);
        return n;
    }();
    return names;
}

TableRing table_ring(const std::string& row, const StructureConstants& sc, int shift) {
    const CompRow& r = comp_row(row);
    TableRing tr;
    tr.row = row;
    tr.shift = shift;
    tr.ring = comp_ring(r, sc, shift);
    tr.ideal = IdealHandle(tr.ring, parse_list(r.relations, r, tr.ring, sc, shift));
    tr.unit_product = Poly::constant(tr.ring, 1);
    for (auto& v : tr.ring->vars)
        if (is_starred(v)) {
            tr.units.push_back(v);
            tr.unit_product = tr.unit_product * Poly::variable(tr.ring, v);
        }
    return tr;
}

std::vector<std::string> component_labels(const std::string& row) {
    std::vector<std::string> out;
    for (auto& c : comp_row(row).comps) out.push_back(c.label);
    return out;
}

IdealHandle component_generators(const std::string& row, const std::string& label, const StructureConstants& sc,
                                 int shift) {
    const CompRow& r = comp_row(row);
    const Component& c = find_component(r, label);
    RingPtr ring = comp_ring(r, sc, shift);
    return IdealHandle(ring, parse_list(c.gens, r, ring, sc, shift));
}

IdealHandle saturate_units(const TableRing& tr, const IdealHandle& I) {
    IdealHandle out = I;
    for (auto& u : tr.units) out = ideal_saturate(out, Poly::variable(tr.ring, u));
    return IdealHandle(out.ring(), out.gb());
}

namespace {

IdealHandle component_from(const TableRing& tr, const std::vector<Poly>& printed) {
    return saturate_units(tr, ideal_sum(tr.ideal, IdealHandle(tr.ring, printed)));
}

} // namespace

IdealHandle component_ideal(const std::string& row, const std::string& label, const StructureConstants& sc,
                            int shift) {
    TableRing tr = table_ring(row, sc, shift);
    return component_from(tr, component_generators(row, label, sc, shift).generators());
}

ComponentReport verify_components(const std::string& row, const StructureConstants& sc, int shift) {
    TableRing tr = table_ring(row, sc, shift);
    ComponentReport rep;
    rep.row = row;
    rep.shift = shift;
    std::vector<IdealHandle> comps;
    auto labels = component_labels(row);
    for (auto& l : labels) {
        comps.push_back(component_from(tr, component_generators(row, l, sc, shift).generators()));
        if (comps.back().is_unit()) {
            rep.proper = false;
            rep.failures.push_back("component " + l + " is the unit ideal");
        }
    }
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = 0; j < comps.size(); ++j)
            if (i != j && ideal_contains(comps[j], comps[i])) {
                rep.minimal = false;
                rep.failures.push_back("component " + labels[j] + " contains " + labels[i]);
            }
    IdealHandle whole = saturate_units(tr, tr.ideal);
    IdealHandle meet = ideal_intersect(comps);
    for (auto& g : meet.gb())
        if (!ideal_member(g, whole)) {
            rep.intersection = false;
            rep.failures.push_back("intersection generator outside the row ideal: " + g.str());
            break;
        }
    rep.gb_size = meet.gb().size();
    return rep;
}

// ---- lemmas

const std::vector<LemmaIdentity>& lemma_identities() {
    static const std::vector<LemmaIdentity> ids{
        {1, 0, "id", {"0,0", "0,1", "e1,0"}, {"0,0", "0,1", "e2,0"}, {"0,0", "0,1"}},
        {2, 0, "a", {"0,1", "0,0", "e2,0"}, {"0,1", "0,0", "e2-e1,0"}, {"0,1", "0,0"}},
        {3, 0, "id", {"0,0", "0,1", "e1,0", "e1,1", "e2,0"}, {"0,0", "0,1", "e2,0", "e2,1", "e1,0"},
         {"0,0", "0,1", "e1,0", "e2,0"}},
        {4, 0, "a", {"0,1", "0,0", "e2,0", "e2-e1,0", "e2,1"}, {"0,1", "0,0", "e2,0", "e1,1"},
         {"0,1", "0,0", "e2,0"}},
        {4, 1, "a", {"e2,1", "e2,0", "0,0", "e2-e1,0", "0,1"}, {"e2,1", "e2,0", "0,0", "e1,1"},
         {"e2,1", "e2,0", "0,0"}},
        {4, 2, "a", {"e1,1", "0,1", "e2,0", "0,1"}, {"e1,1", "0,1", "e2,0", "e2,1"}, {"e1,1", "0,1", "e2,0"}},
    };
    return ids;
}

namespace {

struct LemmaContext {
    TableRing tr;
    StructureConstants sc;
    std::map<std::string, IdealHandle> cache;

    IdealHandle get(const std::string& label) {
        auto it = cache.find(label);
        if (it != cache.end()) return it->second;
        IdealHandle c = component_from(tr, component_generators(tr.row, label, sc).generators());
        cache.emplace(label, c);
        return c;
    }

    IdealHandle meet(const std::vector<std::string>& labels, const Mutation* m = nullptr) {
        std::vector<IdealHandle> parts;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (m && m->component == i) {
                auto gens = component_generators(tr.row, labels[i], sc).generators();
                Poly& g = gens.at(m->generator);
                auto it = std::next(g.terms().begin(), long(m->term));
                g.add_term(it->first, -2 * it->second);
                parts.push_back(component_from(tr, gens));
            } else {
                parts.push_back(get(labels[i]));
            }
        }
        return ideal_intersect(parts);
    }
};

} // namespace

static bool check_identity(LemmaContext& ctx, const LemmaIdentity& id, const Mutation* m, size_t* gb_size = nullptr) {
    IdealHandle lhs = ideal_sum(ctx.meet(id.left1), ctx.meet(id.left2));
    IdealHandle rhs = ctx.meet(id.right, m);
    if (gb_size) *gb_size = rhs.gb().size();
    return ideal_equal(lhs, rhs);
}

bool verify_identity(const LemmaIdentity& id, const StructureConstants& sc, const Mutation* mutation,
                     size_t* gb_size) {
    LemmaContext ctx{table_ring(id.row, sc), sc, {}};
    return check_identity(ctx, id, mutation, gb_size);
}

bool verify_lemma(int k, const StructureConstants& sc, size_t* gb_size) {
    bool any = false;
    if (gb_size) *gb_size = 0;
    for (auto& id : lemma_identities()) {
        if (id.lemma != k) continue;
        any = true;
        size_t n = 0;
        if (!verify_identity(id, sc, nullptr, &n)) return false;
        if (gb_size) *gb_size += n;
    }
    if (!any) throw UnknownRow("no lemma " + std::to_string(k));
    return true;
}

MutationSummary mutation_test(int k, const StructureConstants& sc) {
    MutationSummary s;
    for (auto& id : lemma_identities()) {
        if (id.lemma != k) continue;
        LemmaContext ctx{table_ring(id.row, sc), sc, {}};
        IdealHandle rhs = ctx.meet(id.right);
        for (size_t ci = 0; ci < id.right.size(); ++ci) {
            auto gens = component_generators(id.row, id.right[ci], sc).generators();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                if (gens[gi].terms().size() < 2) continue;
                for (size_t ti = 0; ti < gens[gi].terms().size(); ++ti) {
                    Mutation m{ci, gi, ti};
                    ++s.tried;
                    if (ideal_equal(ctx.meet(id.right, &m), rhs)) {
                        ++s.unchanged_ideal;
                        continue;
                    }
                    if (!check_identity(ctx, id, &m)) ++s.flipped;
                }
            }
        }
    }
    return s;
}

// ---- regression records

std::string to_line(const RegressionRecord& r) {
    nlohmann::ordered_json j;
    j["row"] = r.row;
    j["p"] = r.p;
    j["a"] = r.a;
    j["b"] = r.b;
    j["c"] = r.c;
    j["check"] = r.check;
    j["verdict"] = r.verdict;
    j["gb_size"] = r.gb_size;
    return j.dump();
}

RegressionRecord from_line(const std::string& line) {
    try {
        auto j = nlohmann::json::parse(line);
        return {j.at("row").get<std::string>(), j.at("p").get<Int>(),      j.at("a").get<Int>(),
                j.at("b").get<Int>(),           j.at("c").get<Int>(),      j.at("check").get<std::string>(),
                j.at("verdict").get<bool>(),    j.at("gb_size").get<size_t>()};
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad regression record: ") + e.what());
    }
}

} // namespace serrewt
