#include "serrewt/cli.hpp"

#include <atomic>
#include <mutex>
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include "serrewt/algebra.hpp"
#include "serrewt/classify.hpp"
#include "serrewt/errors.hpp"
#include "serrewt/shapes.hpp"

namespace serrewt {

using nlohmann::json;

// ---- schema subset

namespace {

bool has_type(const json& doc, const std::string& t) {
    if (t == "object") return doc.is_object();
    if (t == "array") return doc.is_array();
    if (t == "string") return doc.is_string();
    if (t == "integer") return doc.is_number_integer();
    if (t == "number") return doc.is_number();
    if (t == "boolean") return doc.is_boolean();
    if (t == "null") return doc.is_null();
    throw SchemaError("schema uses unknown type " + t);
}

} // namespace

void validate(const json& schema, const json& doc, const std::string& path) {
    auto fail = [&](const std::string& what) { throw SchemaError(path + ": " + what); };
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) ok = has_type(doc, t);
        else
            for (auto& x : t) ok = ok || has_type(doc, x);
        if (!ok) fail("expected " + t.dump());
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (auto& v : schema["enum"]) found = found || v == doc;
        if (!found) fail("value " + doc.dump() + " not in " + schema["enum"].dump());
    }
    if (doc.is_number()) {
        if (schema.contains("minimum") && doc.get<double>() < schema["minimum"].get<double>()) fail("below minimum");
        if (schema.contains("maximum") && doc.get<double>() > schema["maximum"].get<double>()) fail("above maximum");
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (auto& k : schema["required"])
                if (!doc.contains(k.get<std::string>())) fail("missing " + k.get<std::string>());
        const json props = schema.value("properties", json::object());
        for (auto& [k, v] : doc.items()) {
            if (props.contains(k)) validate(props[k], v, path + "." + k);
            else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false)
                fail("unexpected field " + k);
        }
    }
    if (doc.is_array()) {
        if (schema.contains("minItems") && doc.size() < schema["minItems"].get<size_t>()) fail("too few items");
        if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<size_t>()) fail("too many items");
        if (schema.contains("items"))
            for (size_t i = 0; i < doc.size(); ++i) validate(schema["items"], doc[i], path + "[" + std::to_string(i) + "]");
    }
}

json load_schema(const std::string& dir, const std::string& name) {
    std::ifstream in(dir + "/" + name);
    if (!in) throw SchemaError("cannot open schema " + dir + "/" + name);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError("malformed schema " + name + ": " + e.what());
    }
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SchemaError*>(&e)) return 2;
    if (dynamic_cast<const DepthError*>(&e)) return 3;
    if (dynamic_cast<const VerificationFailure*>(&e)) return 4;
    if (dynamic_cast<const Error*>(&e)) return 5;
    if (dynamic_cast<const json::exception*>(&e)) return 2;
    return 1;
}

// ---- commands

namespace {

Perm parse_perm(const std::string& s) {
    static const std::map<std::string, Perm> named{{"id", Perm{}},          {"s1", perm_s1()},
                                                   {"s2", perm_s2()},       {"w0", perm_w0()},
                                                   {"cyc", perm_cyc()},     {"cyc2", perm_cyc() * perm_cyc()}};
    if (auto it = named.find(s); it != named.end()) return it->second;
    if (s.size() == 5 && s.front() == '[' && s.back() == ']') {
        std::set<int> seen;
        Perm p;
        for (int i = 0; i < 3; ++i) {
            int d = s[1 + i] - '1';
            if (d < 0 || d > 2 || !seen.insert(d).second) throw SchemaError("bad permutation " + s);
            p.img[i] = std::uint8_t(d);
        }
        return p;
    }
    throw SchemaError("bad permutation " + s);
}

Vec3 vec3(const json& j) { return {j.at(0).get<Int>(), j.at(1).get<Int>(), j.at(2).get<Int>()}; }

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json vecs_json(const std::vector<Vec3>& vs) {
    Json a = Json::array();
    for (auto& v : vs) a.push_back(vec_json(v));
    return a;
}

Json weight_json(const WeightPresentation& w, const std::vector<Vec3>& lam) {
    Json pres;
    pres["w1"] = Json::array();
    for (auto& x : w.w1) pres["w1"].push_back(x.str());
    pres["omega"] = vecs_json(w.omega);
    Json out;
    out["presentation"] = pres;
    out["graph"] = str(to_graph(w, lam));
    out["highest_weight"] = vecs_json(serre_highest_weight(w));
    return out;
}

// mu with the pairings of mu + eta between depth and p - depth
Vec3 random_mu(Int p, int d, std::mt19937_64& rng) {
    if (3 * Int(d) + 3 > p) throw DepthError("no " + std::to_string(d) + "-deep weights modulo " + std::to_string(p));
    std::uniform_int_distribution<Int> x(0, p - 1);
    for (;;) {
        Vec3 mu{x(rng), x(rng), 0};
        if (depth(mu, p) >= d) return mu;
    }
}

TypePresentation type_from(const json& prm, std::mt19937_64& rng) {
    TypePresentation t;
    t.p = prm.at("p").get<Int>();
    size_t f = prm.value("f", 0);
    std::vector<Perm> s;
    if (prm.contains("s")) {
        if (prm["s"].is_string()) s.push_back(parse_perm(prm["s"]));
        else
            for (auto& x : prm["s"]) s.push_back(parse_perm(x));
    }
    if (prm.contains("mu") && f == 0) f = prm["mu"].size();
    if (f == 0) f = s.size() > 1 ? s.size() : 1;
    if (s.empty()) s.push_back(Perm{});
    if (s.size() == 1) s.resize(f, s[0]);
    if (s.size() != f) throw SchemaError("s has " + std::to_string(s.size()) + " entries, f = " + std::to_string(f));
    t.s = s;
    if (prm.contains("mu")) {
        if (prm["mu"].size() != f) throw SchemaError("mu needs one weight per embedding");
        for (auto& m : prm["mu"]) t.mu.push_back(vec3(m));
    } else {
        int d = prm.value("depth", 4);
        for (size_t j = 0; j < f; ++j) t.mu.push_back(random_mu(t.p, d, rng));
    }
    return t;
}

Json type_json(const TypePresentation& t) {
    Json j;
    j["s"] = Json::array();
    for (auto& s : t.s) j["s"].push_back(s.str());
    j["mu"] = vecs_json(t.mu);
    j["depth"] = depth(t.mu, t.p);
    return j;
}

Json run_weights(const json& prm, std::mt19937_64& rng, bool question) {
    TypePresentation t = type_from(prm, rng);
    auto lam = default_base(t);
    std::vector<WeightPresentation> ws;
    if (question) ws = w_question(t, lam);
    else ws = prm.value("outer", false) ? jh_outer(t, lam) : jh_set(t, lam);
    Json r;
    r["type"] = type_json(t);
    r["base"] = vecs_json(lam);
    if (!question) r["exact"] = jh_exact(t);
    r["count"] = ws.size();
    r["weights"] = Json::array();
    for (auto& w : ws) r["weights"].push_back(weight_json(w, lam));
    return r;
}

struct Closure {
    Int p;
    ProductElt x;
    std::vector<SpecPair> sps;
};

Closure close_from(const json& prm) {
    Closure c;
    c.p = prm.value("p", 31);
    std::vector<std::string> us = prm.value("u", std::vector<std::string>{"id"});
    for (auto& u : us) {
        Int k = c.p / 3;
        c.x.push_back(AffElt{Vec3{2 * k - 2, k - 1, 0} + kEta, parse_perm(u)});
    }
    auto seeds = sp_fixed(c.x, c.p);
    if (seeds.empty()) throw DepthError("no specialization pairs at this point");
    const SpecPair& start = seeds[prm.value("start", 0) % seeds.size()];
    std::string oracle = prm.value("oracle", "edges");
    BranchOracle o;
    if (oracle == "all-new-weight") o = constant_oracle(Branch::new_weight);
    else if (oracle == "all-new-specialization") o = constant_oracle(Branch::new_specialization);
    else {
        std::vector<unsigned> masks = prm.value("masks", std::vector<unsigned>{});
        if (masks.size() != c.x.size()) throw SchemaError("edges oracle needs one mask per embedding");
        o = edge_oracle(masks);
    }
    c.sps = close_sp(start, o);
    return c;
}

Json elts_json(const ProductElt& x) {
    Json a = Json::array();
    for (auto& e : x) a.push_back(e.str());
    return a;
}

Json run_walk(const json& prm) {
    Closure c = close_from(prm);
    Json r;
    r["point"] = elts_json(c.x);
    r["pairs"] = Json::array();
    std::vector<Vec3> lam;
    for (auto& e : c.x) lam.push_back(e.nu - kEta + kOne);
    for (auto& sp : c.sps) {
        Json j;
        j["y"] = elts_json(sp.y);
        j["weight"] = weight_json(sp.weight, lam);
        j["theta"] = Json::array();
        for (auto& t : theta(sp)) j["theta"].push_back(t.str());
        r["pairs"].push_back(j);
    }
    r["specializations"] = Json::array();
    for (auto& y : specializations(c.sps)) r["specializations"].push_back(elts_json(y));
    r["obvious_weights"] = obvious_weights(c.sps).size();
    return r;
}

Json run_classify(const json& prm) {
    Closure c = close_from(prm);
    CaseDescriptor cd = classify_case(c.sps);
    Json r;
    r["point"] = elts_json(c.x);
    r["case"] = cd.case_id;
    r["mirrored"] = cd.mirrored;
    r["w"] = Json::array();
    for (auto& w : cd.w) r["w"].push_back(w.str());
    r["base"] = vecs_json(cd.lam);
    auto list = [&](const std::vector<WeightPresentation>& ws) {
        Json a = Json::array();
        for (auto& w : ws) {
            Json j = weight_json(w, cd.lam);
            j["literal"] = str(unplace(cd, w));
            a.push_back(j);
        }
        return a;
    };
    auto obv = obvious_weights(c.sps);
    auto wg = wg_from_case(cd);
    r["obvious"] = list(obv);
    r["geometric"] = list(wg);
    r["counts"] = {{"obvious", obv.size()}, {"geometric", wg.size()}};
    return r;
}

Json run_shape(const json& prm, std::mt19937_64& rng) {
    Int p = prm.at("p").get<Int>();
    Json r;
    LaurentMatrix A(p);
    if (prm.contains("matrix")) {
        auto ring = make_ring({"v"}, p);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                A.at(i, k) = parse_poly(prm["matrix"][i][k].get<std::string>(), ring, {}).eval_laurent({}, "v");
    } else {
        if (!prm.contains("row")) throw SchemaError("shape needs a matrix or a row");
        ChartRef c{prm["row"].get<std::string>(), prm.value("shift", 0)};
        std::map<std::string, Int> a;
        if (prm.contains("assignment"))
            for (auto& [k, v] : prm["assignment"].items()) {
                if (!v.is_number_integer()) throw SchemaError("assignment values are integers");
                a[k] = v.get<Int>();
            }
        else a = random_assignment(c, p, rng);
        AffElt z = chart_element(c);
        A = universal_matrix(z, a, p);
        r["chart"] = {{"row", c.row}, {"shift", c.shift}, {"z", z.str()}};
        Json aj = Json::object();
        for (auto& [k, v] : a) aj[k] = v;
        r["assignment"] = aj;
        r["at_least_center"] = bruhat_leq(z, iwahori_decompose(A).elt, Convention::antidominant);
    }
    ShapeResult s = iwahori_decompose(A);
    r["shape"] = s.elt.str();
    r["nu"] = vec_json(s.elt.nu);
    r["w"] = s.elt.w.str();
    r["admissible"] = in_admissible(s.elt, Convention::antidominant);
    r["precision"] = s.precision;
    r["verified"] = verify_shape(A, s);
    return r;
}

Json run_admissible(const json& prm) {
    Convention c = prm.value("convention", "dominant") == "dominant" ? Convention::dominant : Convention::antidominant;
    auto one = [&](const AffElt& x) {
        Json j;
        j["element"] = x.str();
        j["admissible"] = in_admissible(x, c);
        j["length"] = length(x, c);
        auto rw = reduced_word(x, c);
        j["reduced_word"] = rw.word;
        j["omega"] = rw.omega.str();
        return j;
    };
    Json r;
    r["convention"] = c == Convention::dominant ? "dominant" : "antidominant";
    if (prm.contains("element")) {
        auto& e = prm["element"];
        r["result"] = one(AffElt{vec3(e["nu"]), parse_perm(e["w"].get<std::string>())});
        return r;
    }
    r["elements"] = Json::array();
    for (auto& x : admissible_set(c)) r["elements"].push_back(one(x));
    r["count"] = r["elements"].size();
    return r;
}

struct Task {
    std::string row;
    StructureConstants sc;
    int shift = 0;
    int lemma = 0; // 0 for a component check
};

RegressionRecord run_task(const Task& t) {
    RegressionRecord rec{t.row, t.sc.p, t.sc.a, t.sc.b, t.sc.c, "", false, 0};
    if (t.lemma) {
        rec.check = "lemma" + std::to_string(t.lemma);
        rec.verdict = verify_lemma(t.lemma, t.sc, &rec.gb_size);
    } else {
        rec.check = "components/shift" + std::to_string(t.shift);
        auto rep = verify_components(t.row, t.sc, t.shift);
        rec.verdict = rep.ok();
        rec.gb_size = rep.gb_size;
    }
    return rec;
}

Json run_verify(const json& prm, std::uint64_t seed, unsigned jobs) {
    std::vector<std::string> rows;
    if (!prm.contains("rows") || prm["rows"] == "all") rows = component_rows();
    else if (prm["rows"].is_string()) throw SchemaError("rows is \"all\" or a list");
    else
        for (auto& r : prm["rows"]) {
            component_labels(r.get<std::string>()); // UnknownRow
            rows.push_back(r);
        }
    std::vector<Int> primes = prm.value("primes", std::vector<Int>{11, 13, 17});
    int samples = prm.value("samples", 5);
    int shifts = prm.value("shifts", true) ? 3 : 1;
    bool lemmas = prm.value("lemmas", true);

    std::vector<Task> tasks;
    for (Int p : primes) {
        std::mt19937_64 rng(seed ^ (std::uint64_t(p) * 0x9e3779b97f4a7c15ULL));
        for (int i = 0; i < samples; ++i) {
            StructureConstants sc = random_generic_sc(p, rng);
            for (auto& row : rows)
                for (int sh = 0; sh < shifts; ++sh) tasks.push_back({row, sc, sh, 0});
            if (lemmas)
                for (int k = 1; k <= 4; ++k) {
                    std::string row;
                    for (auto& id : lemma_identities())
                        if (id.lemma == k) row = id.row;
                    tasks.push_back({row, sc, 0, k});
                }
        }
    }
    std::vector<RegressionRecord> out(tasks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_m;
    auto worker = [&] {
        for (size_t i; (i = next++) < tasks.size();) {
            try {
                out[i] = run_task(tasks[i]);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_m);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);

    Json r;
    bool all = true;
    r["records"] = Json::array();
    for (auto& rec : out) {
        all = all && rec.verdict;
        r["records"].push_back(Json::parse(to_line(rec)));
    }
    r["checks"] = out.size();
    r["all_true"] = all;
    return r;
}

const std::map<std::string, std::string>& anchors() {
    static const std::map<std::string, std::string> a{
        {"jh", "jordan-holder-constituents"},       {"wquestion", "predicted-weight-set"},
        {"classify", "geometric-weight-classification"}, {"walk", "simple-walk-closure"},
        {"shape", "iwahori-shape"},                 {"admissible", "admissible-set"},
        {"verify-tables", "local-model-components"}};
    return a;
}

} // namespace

Json run_job(const json& job, const RunOptions& opt) {
    validate(load_schema(opt.schema_dir, "job.schema.json"), job);
    const std::string cmd = job["command"];
    const json prm = job.value("params", json::object());
    validate(load_schema(opt.schema_dir, "params." + cmd + ".schema.json"), prm, "$.params");
    std::uint64_t seed = opt.seed_override ? opt.seed : job.value("seed", std::uint64_t(0));
    std::mt19937_64 rng(seed);

    Json report;
    report["command"] = cmd;
    report["anchor"] = anchors().at(cmd);
    report["seed"] = seed;
    if (cmd == "jh") report["result"] = run_weights(prm, rng, false);
    else if (cmd == "wquestion") report["result"] = run_weights(prm, rng, true);
    else if (cmd == "classify") report["result"] = run_classify(prm);
    else if (cmd == "walk") report["result"] = run_walk(prm);
    else if (cmd == "shape") report["result"] = run_shape(prm, rng);
    else if (cmd == "admissible") report["result"] = run_admissible(prm);
    else report["result"] = run_verify(prm, seed, opt.jobs);
    return report;
}

} // namespace serrewt
