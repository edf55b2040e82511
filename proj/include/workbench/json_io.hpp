#ifndef WORKBENCH_JSON_IO_HPP
#define WORKBENCH_JSON_IO_HPP

// JSON documents for universes, conditions, index sets and the Prikry toys.
// Ordinals and sets travel as literals and are always printed canonically.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "workbench/prikry.hpp"
#include "workbench/projection.hpp"
#include "workbench/ramsey.hpp"

namespace wb::io {

using json = nlohmann::json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json load_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw InputError("cannot read " + p.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

// ---- ordinals and sets

inline json to_json(const Ordinal& x) { return x.str(); }

inline Ordinal ordinal_from(const json& j) {
    if (j.is_number_unsigned()) return Ordinal(j.get<std::uint64_t>());
    if (j.is_string()) return parse_ordinal(j.get<std::string>());
    throw InputError("ordinal literal expected");
}

inline json to_json(const OrdinalSet& s) { return s.str(); }

// A set literal string, or the list form: bare literals are singletons and
// two-element lists are half-open intervals ("inf" allowed on the right).
inline OrdinalSet set_from(const json& j) {
    if (j.is_string()) return parse_set(j.get<std::string>());
    if (!j.is_array()) throw InputError("set literal expected");
    OrdinalSet out;
    for (const auto& it : j) {
        if (it.is_array()) {
            if (it.size() != 2) throw InputError("interval needs two endpoints");
            std::optional<Ordinal> hi;
            if (!(it[1].is_string() && it[1].get<std::string>() == "inf")) hi = ordinal_from(it[1]);
            out = set_union(out, OrdinalSet::interval(ordinal_from(it[0]), hi));
        } else {
            out = set_union(out, OrdinalSet::singleton(ordinal_from(it)));
        }
    }
    return out;
}

inline json to_json(const std::vector<Ordinal>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

inline json to_json(const std::vector<std::vector<Ordinal>>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

inline std::vector<Ordinal> ordinals_from(const json& j) {
    if (!j.is_array()) throw InputError("list of ordinals expected");
    std::vector<Ordinal> out;
    for (const auto& x : j) out.push_back(ordinal_from(x));
    return out;
}

inline std::vector<std::vector<Ordinal>> nested_from(const json& j) {
    if (!j.is_array()) throw InputError("list of lists expected");
    std::vector<std::vector<Ordinal>> out;
    for (const auto& x : j) out.push_back(ordinals_from(x));
    return out;
}

// ---- universes and conditions

inline json to_json(const ToyUniverse& u) {
    json cores = json::array();
    for (const auto& [k, c] : u.cores) cores.push_back({{"beta", k.first.str()}, {"xi", k.second.str()}, {"core", c.str()}});
    return {{"lambda0", u.lambda0.str()}, {"delta0_bound", u.delta0_bound.str()}, {"cores", cores}};
}

inline std::shared_ptr<const ToyUniverse> universe_from(const json& j, const std::filesystem::path& base = {}) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative() && !base.empty()) p = base / p;
        return universe_from(load_json_file(p), p.parent_path());
    }
    if (!j.is_object() || !j.contains("lambda0")) throw InputError("universe document needs lambda0");
    auto u = std::make_shared<ToyUniverse>();
    u->lambda0 = ordinal_from(j.at("lambda0"));
    u->delta0_bound = j.contains("delta0_bound") ? ordinal_from(j.at("delta0_bound")) : succ(u->lambda0.lead_exponent());
    if (j.contains("cores"))
        for (const auto& c : j.at("cores")) u->cores[{ordinal_from(c.at("beta")), ordinal_from(c.at("xi"))}] = set_from(c.at("core"));
    return u;
}

inline json to_json(const Condition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) blocks.push_back({{"kappa", b.kappa.str()}, {"B", b.B ? json(b.B->str()) : json(nullptr)}});
    json j = {{"universe", to_json(*p.u)}, {"blocks", blocks}};
    if (!p.floor.is_zero()) j["floor"] = p.floor.str();
    return j;
}

inline Condition condition_from(const json& j, const std::filesystem::path& base = {}) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("blocks")) throw InputError("condition document needs universe and blocks");
    Condition p{universe_from(j.at("universe"), base), {}, Ordinal()};
    if (j.contains("floor")) p.floor = ordinal_from(j.at("floor"));
    for (const auto& b : j.at("blocks")) {
        Block nb{ordinal_from(b.at("kappa")), std::nullopt};
        if (b.contains("B") && !b.at("B").is_null()) nb.B = set_from(b.at("B"));
        p.blocks.push_back(std::move(nb));
    }
    return p;
}

inline json to_json(const ICondition& q) {
    json j = to_json(q.c);
    j["index"] = q.I.str();
    return j;
}

inline ICondition icondition_from(const json& j, const std::filesystem::path& base = {},
                                  const std::optional<OrdinalSet>& index = std::nullopt) {
    ICondition q{condition_from(j, base), OrdinalSet()};
    if (index) q.I = *index;
    else if (j.contains("index")) q.I = set_from(j.at("index"));
    else throw InputError("index set missing");
    return q;
}

// ---- ramsey tables

inline FiniteProductFn product_fn_from(const json& j) {
    FiniteProductFn f;
    for (const auto& a : j.at("factors")) f.factors.push_back(a.get<std::vector<int>>());
    for (const auto& row : j.at("table")) f.table[row.at(0).get<Tuple>()] = row.at(1).get<std::int64_t>();
    return f;
}

inline json to_json(const FiniteProductFn& f) {
    json t = json::array();
    for (const auto& [k, v] : f.table) t.push_back(json::array({k, v}));
    return {{"factors", f.factors}, {"table", t}};
}

// ---- prikry toys

inline prikry::Measure measure_from(const json& j) {
    prikry::Measure m;
    m.core = j.at("core").get<prikry::IntSet>();
    if (j.contains("pi"))
        for (const auto& kv : j.at("pi")) m.pi[kv.at(0).get<int>()] = kv.at(1).get<int>();
    return m;
}

inline json to_json(const prikry::Measure& m) {
    json pi = json::array();
    for (const auto& [k, v] : m.pi) pi.push_back(json::array({k, v}));
    return {{"core", m.core}, {"pi", pi}};
}

inline prikry::ToyUltraStructure structure_from(const json& j) {
    prikry::ToyUltraStructure u;
    u.ground = j.at("ground").get<prikry::Seq>();
    std::sort(u.ground.begin(), u.ground.end());
    u.fallback = j.contains("fallback") ? measure_from(j.at("fallback")) : prikry::Measure{{u.ground.begin(), u.ground.end()}, {}};
    if (j.contains("nodes"))
        for (const auto& n : j.at("nodes")) u.nodes[n.at("node").get<prikry::Seq>()] = measure_from(n);
    return u;
}

inline json to_json(const prikry::ToyUltraStructure& u) {
    json nodes = json::array();
    for (const auto& [a, m] : u.nodes) {
        json e = to_json(m);
        e["node"] = a;
        nodes.push_back(e);
    }
    return {{"ground", u.ground}, {"fallback", to_json(u.fallback)}, {"nodes", nodes}};
}

inline prikry::TreeCondition tree_from(const json& j) {
    prikry::TreeCondition t;
    t.trunk = j.value("trunk", prikry::Seq{});
    t.depth = j.value("depth", std::size_t{0});
    t.normalized_default = j.value("normalized_default", false);
    if (j.contains("sets"))
        for (const auto& s : j.at("sets")) t.explicit_sets[s.at("node").get<prikry::Seq>()] = s.at("succ").get<prikry::IntSet>();
    return t;
}

inline json to_json(const prikry::TreeCondition& t) {
    json sets = json::array();
    for (const auto& [a, s] : t.explicit_sets) sets.push_back({{"node", a}, {"succ", s}});
    return {{"trunk", t.trunk}, {"depth", t.depth}, {"normalized_default", t.normalized_default}, {"sets", sets}};
}

}  // namespace wb::io

#endif
