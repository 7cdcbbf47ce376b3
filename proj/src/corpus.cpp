#include "polycyclic/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polycyclic/duality.hpp"
#include "polycyclic/error.hpp"

namespace polycyclic {

using nlohmann::json;

namespace {

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(Errc::SchemaError, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(Errc::SchemaError, std::string("field '") + key + "': " + e.what());
    }
}

CorpusRecord record_from(const json& j) {
    if (!j.is_object()) throw Error(Errc::SchemaError, "record must be an object");
    CorpusRecord r;
    r.id = get_field<std::string>(j, "id");
    r.q = get_field<unsigned>(j, "q");
    r.p = j.contains("p") ? get_field<unsigned>(j, "p") : r.q;
    r.m = j.contains("m") ? get_field<unsigned>(j, "m") : 1;
    if (j.contains("modulus")) r.modulus = get_field<std::vector<Elem>>(j, "modulus");
    r.l = get_field<std::size_t>(j, "l");
    r.n = get_field<std::size_t>(j, "n");
    r.a = get_field<std::vector<std::vector<Elem>>>(j, "a");
    r.g = get_field<std::vector<std::vector<Elem>>>(j, "g");
    r.M = j.contains("M") ? get_field<std::vector<std::vector<Elem>>>(j, "M") : std::vector<std::vector<Elem>>{};
    if (j.contains("long")) r.long_running = get_field<bool>(j, "long");
    const json e = j.contains("expect") ? j.at("expect") : json::object();
    if (!e.is_object()) throw Error(Errc::SchemaError, "'expect' must be an object");
    r.expect.params = get_field<std::array<std::size_t, 3>>(e, "params");
    if (e.contains("flags")) r.expect.flags = get_field<std::vector<std::string>>(e, "flags");
    for (const auto& f : r.expect.flags)
        if (std::find(kCorpusFlags.begin(), kCorpusFlags.end(), f) == kCorpusFlags.end())
            throw Error(Errc::SchemaError, "unknown flag '" + f + "'");
    if (e.contains("quantum")) r.expect.quantum = get_field<std::array<std::size_t, 3>>(e, "quantum");
    return r;
}

json record_json(const CorpusRecord& r) {
    json j;
    j["id"] = r.id;
    j["q"] = r.q;
    j["p"] = r.p;
    j["m"] = r.m;
    if (r.modulus) j["modulus"] = *r.modulus;
    j["l"] = r.l;
    j["n"] = r.n;
    j["a"] = r.a;
    j["g"] = r.g;
    j["M"] = r.M;
    json e;
    e["params"] = r.expect.params;
    e["flags"] = r.expect.flags;
    if (r.expect.quantum) e["quantum"] = *r.expect.quantum;
    j["expect"] = e;
    if (r.long_running) j["long"] = true;
    return j;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

}  // namespace

CorpusRecord parse_record(const std::string& json_text) { return record_from(parse_json(json_text)); }

std::string record_to_json(const CorpusRecord& r) { return record_json(r).dump(); }

Corpus parse_corpus(const std::string& json_text) {
    json j = parse_json(json_text);
    Corpus c;
    if (j.is_object() && j.contains("records")) {
        if (j.contains("name")) c.name = get_field<std::string>(j, "name");
        if (!j.at("records").is_array()) throw Error(Errc::SchemaError, "'records' must be an array");
        for (const auto& r : j.at("records")) c.records.push_back(record_from(r));
    } else if (j.is_array()) {
        for (const auto& r : j) c.records.push_back(record_from(r));
    } else {
        c.records.push_back(record_from(j));
    }
    return c;
}

std::string corpus_to_json(const Corpus& c) {
    json j;
    j["name"] = c.name;
    j["records"] = json::array();
    for (const auto& r : c.records) j["records"].push_back(record_json(r));
    return j.dump(1);
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
}

Instance instantiate(const CorpusRecord& r) {
    unsigned q = 1;
    for (unsigned i = 0; i < r.m; ++i) q *= r.p;
    if (r.m == 0 || q != r.q) throw Error(Errc::SchemaError, "q must equal p^m");
    std::optional<std::vector<Elem>> mod;
    if (r.modulus) mod = *r.modulus;
    Field f = Field::make(r.p, r.m, mod);
    if (r.a.size() != r.l || r.g.size() != r.l) throw Error(Errc::SchemaError, "a and g need l components");
    auto check = [&](const std::vector<Elem>& cs) {
        for (Elem c : cs)
            if (!f.contains(c)) throw Error(Errc::SchemaError, "coefficient " + std::to_string(c) + " outside F_q");
        return Poly(f, cs);
    };
    std::vector<Poly> a, g;
    for (const auto& c : r.a) a.push_back(check(c));
    for (const auto& c : r.g) g.push_back(check(c));
    PolycyclicCode code = code_new(f, r.l, r.n, a, g);
    Matrix m = Matrix::identity(f, r.l);
    if (!r.M.empty()) {
        if (r.M.size() != r.l) throw Error(Errc::SchemaError, "M must be l x l");
        for (const auto& row : r.M) {
            if (row.size() != r.l) throw Error(Errc::SchemaError, "M must be l x l");
            for (Elem c : row)
                if (!f.contains(c)) throw Error(Errc::SchemaError, "M entry outside F_q");
        }
        m = Matrix(f, r.l, r.M);
    }
    return Instance{f, std::move(code), gray_spec(m)};
}

std::map<std::string, bool> compute_flags(const Instance& inst, const LinearCode& image, const Distance& d) {
    std::map<std::string, bool> out;
    out["lcd"] = lc_is_lcd(image);
    out["quasicyclic"] = is_quasi_cyclic(lc_from_rows(code_basis_rows(inst.code)), inst.code.shift());
    out["dualcontaining"] = is_ann_dual_containing(inst.code);
    if (d.exact) {
        const Singleton s = lc_classify(image, d);
        out["mds"] = s == Singleton::Mds;
        out["amds"] = s == Singleton::AlmostMds;
    }
    return out;
}

namespace {

std::string triple(const std::array<std::size_t, 3>& t) {
    return "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "]";
}

}  // namespace

RecordReport verify_record(const CorpusRecord& r, std::uint64_t budget) {
    RecordReport rep;
    rep.id = r.id;
    const Instance inst = instantiate(r);
    const LinearCode image = gray_image(inst.code, inst.gray);
    const Distance d = lc_min_distance(image, budget);
    rep.params = {image.n(), image.k(), d.d};
    rep.d_exact = d.exact;
    if (rep.params != r.expect.params)
        rep.mismatches.push_back("params " + triple(rep.params) + (d.exact ? "" : " (d lower bound)") +
                                 " != expected " + triple(r.expect.params));
    else if (!d.exact)
        rep.mismatches.push_back("distance is only a lower bound within the budget");
    const auto flags = compute_flags(inst, image, d);
    for (const auto& [name, value] : flags)
        if (value) rep.flags.push_back(name);
    for (const auto& want : r.expect.flags) {
        auto it = flags.find(want);
        if (it == flags.end())
            rep.mismatches.push_back("flag " + want + " undecided (distance not exact)");
        else if (!it->second)
            rep.mismatches.push_back("flag " + want + " expected but does not hold");
    }
    if (r.expect.quantum) {
        try {
            QuantumParams qp = quantum_from_polycyclic(inst.code, inst.gray, budget);
            rep.quantum = qp;
            std::array<std::size_t, 3> got{qp.N, qp.K, qp.D};
            if (got != *r.expect.quantum)
                rep.mismatches.push_back("quantum " + qp.to_string() + " != expected " + triple(*r.expect.quantum));
            else if (!qp.bound_certified)
                rep.mismatches.push_back("quantum distance bound is not certified within the budget");
        } catch (const Error& e) {
            rep.mismatches.push_back(std::string("quantum: ") + e.what());
        }
    }
    rep.pass = rep.mismatches.empty();
    return rep;
}

}  // namespace polycyclic
