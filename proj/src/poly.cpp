#include "serrewt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "serrewt/errors.hpp"

namespace serrewt {

int Ring::index(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : int(it - vars.begin());
}

RingPtr make_ring(std::vector<std::string> vars, Int modulus, int elim) {
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->modulus = modulus;
    r->elim = elim;
    return r;
}

int degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    if (elim) {
        int ea = 0, eb = 0;
        for (int i = 0; i < elim; ++i) ea += a[i], eb += b[i];
        if (ea != eb) return ea > eb;
    }
    int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Int Poly::norm(Int c) const {
    Int m = modulus();
    return m ? mod_norm(c, m) : c;
}

Poly Poly::constant(RingPtr ring, Int c) {
    Poly r(ring);
    r.add_term(Monomial(ring->size(), 0), c);
    return r;
}

Poly Poly::variable(RingPtr ring, const std::string& name) {
    int i = ring->index(name);
    if (i < 0) throw MissingVariable("variable " + name + " not in ring");
    Monomial m(ring->size(), 0);
    m[i] = 1;
    return term(ring, m, 1);
}

Poly Poly::term(RingPtr ring, Monomial m, Int c) {
    Poly r(std::move(ring));
    r.add_term(m, c);
    return r;
}

int Poly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, degree(m));
    return d;
}

bool Poly::has_negative_exponents() const {
    for (auto& [m, c] : terms_)
        for (int e : m)
            if (e < 0) return true;
    return false;
}

void Poly::add_term(const Monomial& m, Int c) {
    c = norm(c);
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = norm(it->second + c);
    if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = ring_ ? *this : Poly(o.ring_);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(ring_ ? ring_ : o.ring_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            Monomial m(m1.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, norm(c1) * norm(c2));
        }
    return r;
}

Poly Poly::scaled(Int c) const {
    Poly r(ring_);
    for (auto& [m, k] : terms_) r.add_term(m, norm(k) * norm(c));
    return r;
}

Poly Poly::times_term(const Monomial& mono, Int c) const {
    Poly r(ring_);
    for (auto& [m, k] : terms_) {
        Monomial mm(m.size());
        for (size_t i = 0; i < m.size(); ++i) mm[i] = m[i] + mono[i];
        r.add_term(mm, norm(k) * norm(c));
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || modulus() == 0) return *this;
    return scaled(mod_inv(lead_coeff(), modulus()));
}

Poly Poly::pow(int e) const {
    if (e < 0) {
        // only monomials invert
        if (terms_.size() != 1) throw DecompositionError("negative power of a non-monomial: " + str());
        auto& [m, c] = *terms_.begin();
        Monomial inv(m.size());
        for (size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
        Int m0 = modulus();
        if (m0 == 0 && c != 1 && c != -1) throw DecompositionError("cannot invert coefficient over Z");
        Int ci = m0 ? mod_inv(c, m0) : c;
        return term(ring_, inv, ci).pow(-e);
    }
    Poly r = constant(ring_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::to_ring(const RingPtr& other) const {
    std::vector<int> map(ring_->size());
    for (size_t i = 0; i < ring_->size(); ++i) map[i] = other->index(ring_->vars[i]);
    Poly r(other);
    for (auto& [m, c] : terms_) {
        Monomial mm(other->size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0) throw MissingVariable("variable " + ring_->vars[i] + " not in target ring");
            mm[map[i]] = m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

static Int ipow_mod(Int b, int e, Int m) {
    if (e < 0) {
        if (m == 0) {
            if (b == 1 || b == -1) return ipow_mod(b, -e, m);
            throw DecompositionError("cannot invert " + std::to_string(b) + " over Z");
        }
        b = mod_norm(b, m);
        if (b == 0) throw RelationViolation("inverting a variable that vanishes");
        return ipow_mod(mod_inv(b, m), -e, m);
    }
    Int r = 1;
    for (int i = 0; i < e; ++i) r = m ? mod_norm(r * b, m) : r * b;
    return r;
}

LaurentPoly Poly::eval_laurent(const std::map<std::string, Int>& values, const std::string& keep) const {
    Int m = modulus();
    int k = ring_->index(keep);
    LaurentPoly out(m);
    for (auto& [mono, c] : terms_) {
        Int coeff = c;
        int e = 0;
        for (size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (int(i) == k) {
                e = mono[i];
                continue;
            }
            auto it = values.find(ring_->vars[i]);
            if (it == values.end()) throw MissingVariable("no value for " + ring_->vars[i]);
            Int f = ipow_mod(it->second, mono[i], m);
            coeff = m ? mod_norm(coeff * f, m) : coeff * f;
        }
        out.add(e, coeff);
    }
    return out;
}

Int Poly::eval(const std::map<std::string, Int>& values) const {
    LaurentPoly r = eval_laurent(values, "");
    return r.coeff(0);
}

std::vector<std::string> Poly::used_variables() const {
    std::set<int> used;
    for (auto& [m, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) used.insert(int(i));
    std::vector<std::string> out;
    for (int i : used) out.push_back(ring_->vars[i]);
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c0] : terms_) {
        Int c = c0;
        Int mod = modulus();
        if (mod && c > mod / 2) c -= mod;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Int a = c < 0 ? -c : c;
        bool unit = true;
        for (int e : m)
            if (e) unit = false;
        std::string body;
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!body.empty()) body += "*";
            body += ring_->vars[i];
            if (m[i] != 1) body += "^" + std::to_string(m[i]);
        }
        if (unit) os << a;
        else if (a == 1) os << body;
        else os << a << "*" << body;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    const RingPtr& ring;
    const std::map<std::string, Int>& consts;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw SchemaError("parse error at " + std::to_string(i) + " in '" + s + "': " + what);
    }

    Poly expr() {
        Poly r(ring);
        bool neg = eat('-');
        if (!neg) eat('+');
        Poly t = product();
        r = neg ? -t : t;
        for (;;) {
            if (eat('+')) r = r + product();
            else if (eat('-')) r = r - product();
            else break;
        }
        return r;
    }

    Poly product() {
        Poly r = power();
        for (;;) {
            ws();
            if (eat('*')) {
                r = r * power();
                continue;
            }
            // juxtaposition, as in 2c11 or (v+p)c12
            if (i < s.size() && (s[i] == '(' || std::isalpha(static_cast<unsigned char>(s[i])))) {
                r = r * power();
                continue;
            }
            break;
        }
        return r;
    }

    Poly power() {
        Poly b = atom();
        if (eat('^')) {
            ws();
            bool neg = false;
            if (eat('(')) {
                neg = eat('-');
                int e = number();
                if (!eat(')')) fail("expected )");
                return b.pow(neg ? -e : e);
            }
            neg = eat('-');
            int e = number();
            return b.pow(neg ? -e : e);
        }
        return b;
    }

    int number() {
        ws();
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail("expected integer");
        return std::stoi(s.substr(st, i - st));
    }

    Poly atom() {
        ws();
        if (eat('(')) {
            Poly r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return Poly::constant(ring, std::stoll(s.substr(st, i - st)));
        }
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            size_t st = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            std::string name = s.substr(st, i - st);
            if (ring->index(name) >= 0) return Poly::variable(ring, name);
            auto it = consts.find(name);
            if (it != consts.end()) return Poly::constant(ring, it->second);
            throw MissingVariable("unknown identifier " + name);
        }
        fail("unexpected character");
    }
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring, const std::map<std::string, Int>& constants) {
    Parser ps{text, ring, constants};
    Poly r = ps.expr();
    ps.ws();
    if (ps.i != text.size()) ps.fail("trailing input");
    return r;
}

} // namespace serrewt
