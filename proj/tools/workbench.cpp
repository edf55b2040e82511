// Command-line front end.  Exit status: 0 ok/true, 1 violations/false or a
// failed construction, 2 malformed input.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include "CLI11.hpp"
#include "workbench/generic.hpp"
#include "workbench/json_io.hpp"
#include "workbench/random.hpp"
#include "workbench/registry.hpp"

using namespace wb;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Out {
    json input = json::object();
    json result;
    int code = 0;
    std::string text;  // human rendering; falls back to the result
};

struct Doc {
    json j;
    fs::path base;
};

// A path to a JSON file, or inline JSON.
Doc load_doc(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        try {
            return {json::parse(arg), fs::current_path()};
        } catch (const json::parse_error& e) {
            throw io::InputError(std::string("inline JSON: ") + e.what());
        }
    }
    fs::path p(arg);
    return {io::load_json_file(p), p.parent_path()};
}

Condition load_condition(const std::string& arg) {
    Doc d = load_doc(arg);
    return io::condition_from(d.j, d.base);
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

Out verdict(bool b, json input) {
    Out o;
    o.input = std::move(input);
    o.result = b;
    o.code = b ? 0 : 1;
    return o;
}

Out violations(const std::vector<std::string>& v, json input) {
    Out o;
    o.input = std::move(input);
    o.result = {{"ok", v.empty()}, {"violations", v}};
    o.code = v.empty() ? 0 : 1;
    if (v.empty()) o.text = "ok";
    for (const auto& s : v) o.text += (o.text.empty() ? "" : "\n") + s;
    return o;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoul(tok));
        } catch (const std::exception&) {
            throw io::InputError("bad size list: " + s);
        }
    }
    return out;
}

// Named tuple functions for derivations and projections.
std::function<prikry::Seq(const prikry::Seq&)> named_tuple_fn(const std::string& name) {
    using prikry::Seq;
    if (name == "id") return [](const Seq& t) { return t; };
    if (name == "first") return [](const Seq& t) { return Seq{t.front()}; };
    if (name == "last") return [](const Seq& t) { return Seq{t.back()}; };
    if (name == "sum") return [](const Seq& t) { return Seq{std::accumulate(t.begin(), t.end(), 0)}; };
    if (name == "max") return [](const Seq& t) { return Seq{*std::max_element(t.begin(), t.end())}; };
    if (name == "min") return [](const Seq& t) { return Seq{*std::min_element(t.begin(), t.end())}; };
    if (name.rfind("const:", 0) == 0) {
        int c = std::stoi(name.substr(6));
        return [c](const Seq&) { return Seq{c}; };
    }
    if (name.rfind("coord:", 0) == 0) {
        std::size_t k = std::stoul(name.substr(6));
        if (k == 0) throw io::InputError("coordinates are 1-based");
        return [k](const Seq& t) {
            if (k > t.size()) throw io::InputError("coordinate beyond tuple length");
            return Seq{t[k - 1]};
        };
    }
    throw io::InputError("unknown function name: " + name);
}

std::optional<OrdinalSet> opt_set(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_set(s);
}

OrdinalSet need_index(const std::string& s) {
    if (s.empty()) throw io::InputError("--index is required");
    return parse_set(s);
}

json report_json(const DReport& r) {
    if (r.ok) return {{"ok", true}};
    return {{"ok", false}, {"block", r.block}, {"clause", r.clause}, {"gamma", r.gamma.str()}, {"message", r.message}};
}

template <class Rng>
int self_test(Rng& rng, std::uint64_t seed) {
    int checks = 0, failures = 0;
    auto expect = [&](bool b, const std::string& what) {
        ++checks;
        if (!b) {
            ++failures;
            std::cerr << "self-test failure: " << what << "\n";
        }
    };
    auto es = enumerate_below_omega_omega(200);
    std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
    for (int k = 0; k < 2000; ++k) {
        const Ordinal &a = es[pick(rng)], &b = es[pick(rng)], &c = es[pick(rng)];
        expect(add(add(a, b), c) == add(a, add(b, c)), "associativity");
        Ordinal lo = std::min(a, b), hi = std::max(a, b);
        Ordinal acc = lo;
        for (const auto& e : cnf_difference(lo, hi)) acc = add(acc, omega_power(e));
        expect(acc == hi, "cnf_difference round trip");
    }
    auto u = canonical_universe(parse_ordinal("w^3"));
    for (int k = 0; k < 20; ++k) {
        Condition p = random_condition(u, rng);
        OrdinalSet I = random_index_set(u->lambda0, rng);
        try {
            Condition q = densify(p, I);
            expect(leq(p, q) && in_D(q, I).ok, "densify");
        } catch (const ConditionError& e) {
            expect(e.code() == "RepairImpossible", std::string("densify: ") + e.what());
        }
    }
    std::cout << "self-test seed " << seed << ": " << checks - failures << "/" << checks << " checks passed\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for Magidor and Prikry forcing combinatorics"};
    app.require_subcommand(0, 1);
    bool machine = false, list_verbs = false, run_self_test = false;
    app.add_flag("--json", machine, "emit one JSON document");
    app.add_flag("--list-verbs", list_verbs, "print every verb and the operation it reaches");
    app.add_flag("--self-test", run_self_test, "run randomized checks (seed from WORKBENCH_SEED)");

    std::map<std::string, std::function<Out()>> handlers;
    std::map<std::string, CLI::App*> leaves;
    std::map<std::string, CLI::App*> groups;
    auto group = [&](const std::string& g, const std::string& desc) {
        auto* sub = app.add_subcommand(g, desc);
        sub->require_subcommand(1);
        groups[g] = sub;
        return sub;
    };
    auto verb = [&](const std::string& g, const std::string& name, const std::string& desc) {
        auto* sub = groups.at(g)->add_subcommand(name, desc);
        leaves[g + " " + name] = sub;
        return sub;
    };

    // ---------------------------------------------------------- ord
    group("ord", "ordinal arithmetic");
    std::string oa, ob;
    {
        auto* s = verb("ord", "add", "a + b");
        s->add_option("a", oa)->required();
        s->add_option("b", ob)->required();
        handlers["ord add"] = [&] {
            Ordinal a = parse_ordinal(oa), b = parse_ordinal(ob);
            return Out{{{"a", a.str()}, {"b", b.str()}}, add(a, b).str()};
        };
        s = verb("ord", "diff", "exponent list of the difference b - a");
        s->add_option("a", oa)->required();
        s->add_option("b", ob)->required();
        handlers["ord diff"] = [&] {
            Ordinal a = parse_ordinal(oa), b = parse_ordinal(ob);
            Out o{{{"a", a.str()}, {"b", b.str()}}, io::to_json(cnf_difference(a, b))};
            for (const auto& e : cnf_difference(a, b)) o.text += (o.text.empty() ? "" : ",") + e.str();
            o.text = "<" + o.text + ">";
            return o;
        };
        s = verb("ord", "cmp", "compare a and b");
        s->add_option("a", oa)->required();
        s->add_option("b", ob)->required();
        handlers["ord cmp"] = [&] {
            Ordinal a = parse_ordinal(oa), b = parse_ordinal(ob);
            int c = compare(a, b);
            return Out{{{"a", a.str()}, {"b", b.str()}}, c < 0 ? "Less" : c == 0 ? "Equal" : "Greater"};
        };
        s = verb("ord", "olimit", "limit order (last exponent)");
        s->add_option("a", oa)->required();
        handlers["ord olimit"] = [&] {
            Ordinal a = parse_ordinal(oa);
            if (a.is_zero()) throw Undefined("limit order of 0");
            return Out{{{"a", a.str()}}, limit_order(a).str()};
        };
        s = verb("ord", "classify", "Zero, Successor or Limit");
        s->add_option("a", oa)->required();
        handlers["ord classify"] = [&] {
            Ordinal a = parse_ordinal(oa);
            return Out{{{"a", a.str()}}, kind_name(classify(a))};
        };
        s = verb("ord", "pow", "omega to the power e");
        s->add_option("e", oa)->required();
        handlers["ord pow"] = [&] {
            Ordinal e = parse_ordinal(oa);
            return Out{{{"e", e.str()}}, omega_power(e).str()};
        };
    }

    // ---------------------------------------------------------- set
    group("set", "ordinal set algebra");
    std::string sa, sb;
    for (const char* op : {"union", "inter", "diff"}) {
        auto* s = verb("set", op, std::string("set ") + op);
        s->add_option("a", sa)->required();
        s->add_option("b", sb)->required();
        std::string o = op;
        handlers["set " + o] = [&, o] {
            OrdinalSet a = parse_set(sa), b = parse_set(sb);
            OrdinalSet r = o == "union" ? set_union(a, b) : o == "inter" ? set_inter(a, b) : set_diff(a, b);
            return Out{{{"a", a.str()}, {"b", b.str()}}, r.str()};
        };
    }
    {
        auto* s = verb("set", "member", "is x in the set");
        s->add_option("set", sa)->required();
        s->add_option("x", ob)->required();
        handlers["set member"] = [&] {
            OrdinalSet a = parse_set(sa);
            Ordinal x = parse_ordinal(ob);
            return verdict(a.contains(x), {{"set", a.str()}, {"x", x.str()}});
        };
        s = verb("set", "below", "elements below b");
        s->add_option("set", sa)->required();
        s->add_option("b", ob)->required();
        handlers["set below"] = [&] {
            OrdinalSet a = parse_set(sa);
            Ordinal b = parse_ordinal(ob);
            return Out{{{"set", a.str()}, {"b", b.str()}}, a.below(b).str()};
        };
        s = verb("set", "above", "elements above a");
        s->add_option("set", sa)->required();
        s->add_option("a", ob)->required();
        handlers["set above"] = [&] {
            OrdinalSet a = parse_set(sa);
            Ordinal b = parse_ordinal(ob);
            return Out{{{"set", a.str()}, {"a", b.str()}}, a.above(b).str()};
        };
        s = verb("set", "stratum", "ordinals below `below` with limit order xi");
        s->add_option("xi", oa)->required();
        s->add_option("below", ob)->required();
        handlers["set stratum"] = [&] {
            Ordinal xi = parse_ordinal(oa), b = parse_ordinal(ob);
            ToyUniverse u;
            return Out{{{"xi", xi.str()}, {"below", b.str()}}, u.stratum(xi, b).str()};
        };
    }

    // ---------------------------------------------------------- uni
    group("uni", "toy universes");
    std::string ufile;
    {
        auto* s = verb("uni", "check", "check a universe document");
        s->add_option("universe", ufile)->required();
        handlers["uni check"] = [&] {
            Doc d = load_doc(ufile);
            auto u = io::universe_from(d.j, d.base);
            return violations(u->check(), io::to_json(*u));
        };
        s = verb("uni", "large", "is B large at (beta, xi)");
        s->add_option("universe", ufile)->required();
        s->add_option("B", sa)->required();
        s->add_option("beta", oa)->required();
        s->add_option("xi", ob)->required();
        handlers["uni large"] = [&] {
            Doc d = load_doc(ufile);
            auto u = io::universe_from(d.j, d.base);
            OrdinalSet b = parse_set(sa);
            Ordinal beta = parse_ordinal(oa), xi = parse_ordinal(ob);
            return verdict(is_large(*u, b, beta, xi), {{"universe", io::to_json(*u)}, {"B", b.str()}, {"beta", beta.str()}, {"xi", xi.str()}});
        };
        s = verb("uni", "star", "star closure of B below beta");
        s->add_option("universe", ufile)->required();
        s->add_option("B", sa)->required();
        s->add_option("beta", oa)->required();
        handlers["uni star"] = [&] {
            Doc d = load_doc(ufile);
            auto u = io::universe_from(d.j, d.base);
            OrdinalSet b = parse_set(sa);
            Ordinal beta = parse_ordinal(oa);
            return Out{{{"universe", io::to_json(*u)}, {"B", b.str()}, {"beta", beta.str()}}, star_closure(*u, b, beta).str()};
        };
        s = verb("uni", "stratify", "per-order pieces of the star closure");
        s->add_option("universe", ufile)->required();
        s->add_option("B", sa)->required();
        s->add_option("beta", oa)->required();
        handlers["uni stratify"] = [&] {
            Doc d = load_doc(ufile);
            auto u = io::universe_from(d.j, d.base);
            OrdinalSet b = parse_set(sa);
            Ordinal beta = parse_ordinal(oa);
            json r = json::object();
            for (const auto& [xi, piece] : stratify(*u, b, beta)) r[xi.str()] = piece.str();
            return Out{{{"universe", io::to_json(*u)}, {"B", b.str()}, {"beta", beta.str()}}, r};
        };
    }

    // ---------------------------------------------------------- cond
    group("cond", "Magidor conditions");
    std::string c1, c2, points;
    bool star = false;
    std::size_t idx = 0;
    {
        auto* s = verb("cond", "validate", "check every clause of a condition");
        s->add_option("condition", c1)->required();
        handlers["cond validate"] = [&] {
            Condition p = load_condition(c1);
            return violations(validate(p), io::to_json(p));
        };
        s = verb("cond", "leq", "does q extend p");
        s->add_option("p", c1)->required();
        s->add_option("q", c2)->required();
        s->add_flag("--star", star, "direct extension");
        handlers["cond leq"] = [&] {
            Condition p = load_condition(c1), q = load_condition(c2);
            return verdict(star ? leq_star(p, q) : leq(p, q), {{"p", io::to_json(p)}, {"q", io::to_json(q)}, {"star", star}});
        };
        s = verb("cond", "gamma", "coordinate of block i (1-based)");
        s->add_option("condition", c1)->required();
        s->add_option("i", idx)->required();
        handlers["cond gamma"] = [&] {
            Condition p = load_condition(c1);
            if (idx == 0 || idx > p.size()) throw io::InputError("block index out of range");
            return Out{{{"condition", io::to_json(p)}, {"i", idx}}, gamma_of(p, idx).str()};
        };
        s = verb("cond", "type", "extension type of an assignment");
        s->add_option("condition", c1)->required();
        s->add_option("--points", points, "JSON list of per-gap point lists")->required();
        handlers["cond type"] = [&] {
            Condition p = load_condition(c1);
            Assignment a = io::nested_from(load_doc(points).j);
            return Out{{{"condition", io::to_json(p)}, {"points", io::to_json(a)}}, io::to_json(type_of(p, a))};
        };
        s = verb("cond", "extend", "add the given points");
        s->add_option("condition", c1)->required();
        s->add_option("--points", points, "JSON list of per-gap point lists")->required();
        handlers["cond extend"] = [&] {
            Condition p = load_condition(c1);
            Assignment a = io::nested_from(load_doc(points).j);
            return Out{{{"condition", io::to_json(p)}, {"points", io::to_json(a)}}, io::to_json(extend(p, a))};
        };
        s = verb("cond", "find-type", "type and points of an extension");
        s->add_option("p", c1)->required();
        s->add_option("q", c2)->required();
        handlers["cond find-type"] = [&] {
            Condition p = load_condition(c1), q = load_condition(c2);
            FoundType f = find_type(p, q);
            return Out{{{"p", io::to_json(p)}, {"q", io::to_json(q)}}, {{"type", io::to_json(f.type)}, {"points", io::to_json(f.points)}}};
        };
        s = verb("cond", "unveil", "type unveiling gamma as a maximal coordinate");
        s->add_option("condition", c1)->required();
        s->add_option("gamma", oa)->required();
        handlers["cond unveil"] = [&] {
            Condition p = load_condition(c1);
            Ordinal g = parse_ordinal(oa);
            return Out{{{"condition", io::to_json(p)}, {"gamma", g.str()}}, io::to_json(unveil_type(p, g))};
        };
        s = verb("cond", "split", "split at block i (1-based)");
        s->add_option("condition", c1)->required();
        s->add_option("i", idx)->required();
        handlers["cond split"] = [&] {
            Condition p = load_condition(c1);
            SplitPair sp = split_at(p, idx);
            return Out{{{"condition", io::to_json(p)}, {"i", idx}}, {{"lower", io::to_json(sp.lower)}, {"upper", io::to_json(sp.upper)}}};
        };
        s = verb("cond", "join", "rejoin a split");
        s->add_option("lower", c1)->required();
        s->add_option("upper", c2)->required();
        handlers["cond join"] = [&] {
            Condition l = load_condition(c1), u = load_condition(c2);
            return Out{{{"lower", io::to_json(l)}, {"upper", io::to_json(u)}}, io::to_json(join(l, u))};
        };
    }

    // ---------------------------------------------------------- proj
    group("proj", "projection to an index set");
    std::string index, roots, cstar;
    auto with_index = [&](CLI::App* s) { s->add_option("--index", index, "index set literal"); };
    {
        auto* s = verb("proj", "index", "I(t_i, p) for every block");
        s->add_option("condition", c1)->required();
        with_index(s);
        handlers["proj index"] = [&] {
            Condition p = load_condition(c1);
            OrdinalSet I = need_index(index);
            json r = json::array();
            for (const auto& x : index_of(p, I)) r.push_back(x ? json(x->str()) : json("NA"));
            return Out{{{"condition", io::to_json(p)}, {"index", I.str()}}, r};
        };
        s = verb("proj", "pi", "projection to the index set");
        s->add_option("condition", c1)->required();
        with_index(s);
        handlers["proj pi"] = [&] {
            Condition p = load_condition(c1);
            OrdinalSet I = need_index(index);
            return Out{{{"condition", io::to_json(p)}, {"index", I.str()}}, io::to_json(pi(p, I))};
        };
        s = verb("proj", "validate", "check an I-condition");
        s->add_option("icondition", c1)->required();
        with_index(s);
        handlers["proj validate"] = [&] {
            Doc d = load_doc(c1);
            ICondition q = io::icondition_from(d.j, d.base, opt_set(index));
            return violations(validate_I(q), io::to_json(q));
        };
        s = verb("proj", "leq", "order of I-conditions");
        s->add_option("p", c1)->required();
        s->add_option("q", c2)->required();
        s->add_flag("--star", star, "direct extension");
        with_index(s);
        handlers["proj leq"] = [&] {
            Doc d1 = load_doc(c1), d2 = load_doc(c2);
            ICondition p = io::icondition_from(d1.j, d1.base, opt_set(index));
            ICondition q = io::icondition_from(d2.j, d2.base, opt_set(index));
            return verdict(star ? leq_I_star(p, q) : leq_I(p, q), {{"p", io::to_json(p)}, {"q", io::to_json(q)}, {"star", star}});
        };
        s = verb("proj", "in-d", "membership in the dense set D");
        s->add_option("condition", c1)->required();
        with_index(s);
        handlers["proj in-d"] = [&] {
            Condition p = load_condition(c1);
            OrdinalSet I = need_index(index);
            DReport r = in_D(p, I);
            Out o{{{"condition", io::to_json(p)}, {"index", I.str()}}, report_json(r), r.ok ? 0 : 1};
            o.text = r.ok ? "ok" : "fails at block " + std::to_string(r.block) + " (" + r.gamma.str() + "): " + r.message;
            return o;
        };
        s = verb("proj", "densify", "extend into D");
        s->add_option("condition", c1)->required();
        with_index(s);
        handlers["proj densify"] = [&] {
            Condition p = load_condition(c1);
            OrdinalSet I = need_index(index);
            DensifyTrace tr;
            Condition q = densify(p, I, &tr);
            Out o{{{"condition", io::to_json(p)}, {"index", I.str()}}, io::to_json(q)};
            return o;
        };
        s = verb("proj", "onto", "a member of D projecting onto q");
        s->add_option("icondition", c1)->required();
        with_index(s);
        handlers["proj onto"] = [&] {
            Doc d = load_doc(c1);
            ICondition q = io::icondition_from(d.j, d.base, opt_set(index));
            return Out{{{"icondition", io::to_json(q)}}, io::to_json(onto_construct(q))};
        };
        s = verb("proj", "lift", "extend p so that it projects onto q");
        s->add_option("p", c1)->required();
        s->add_option("q", c2)->required();
        with_index(s);
        handlers["proj lift"] = [&] {
            Condition p = load_condition(c1);
            Doc d = load_doc(c2);
            ICondition q = io::icondition_from(d.j, d.base, opt_set(index));
            return Out{{{"p", io::to_json(p)}, {"q", io::to_json(q)}}, io::to_json(lift(p, q))};
        };
        s = verb("proj", "check-correct", "does pi(p) compute I correctly");
        s->add_option("condition", c1)->required();
        with_index(s);
        handlers["proj check-correct"] = [&] {
            Condition p = load_condition(c1);
            OrdinalSet I = need_index(index);
            return verdict(correct_computation_check(p, I), {{"condition", io::to_json(p)}, {"index", I.str()}});
        };
        s = verb("proj", "refine-clubs", "adjoin points until every interval is empty or unbounded");
        s->add_option("--roots", roots, "JSON list of ordinals")->required();
        s->add_option("--cstar", cstar, "set literal")->required();
        handlers["proj refine-clubs"] = [&] {
            auto rs = io::ordinals_from(load_doc(roots).j);
            OrdinalSet c = parse_set(cstar);
            return Out{{{"roots", io::to_json(rs)}, {"cstar", c.str()}}, io::to_json(refine_to_clubs(rs, c))};
        };
        s = verb("proj", "quotient-member", "is pi(p) in the simulated I-generic");
        s->add_option("condition", c1)->required();
        with_index(s);
        handlers["proj quotient-member"] = [&] {
            Condition p = load_condition(c1);
            OrdinalSet I = need_index(index);
            std::string why;
            bool b = quotient_member(p, I, &why);
            Out o = verdict(b, {{"condition", io::to_json(p)}, {"index", I.str()}});
            if (!b) o.text = "false: " + why;
            return o;
        };
    }

    // ---------------------------------------------------------- gen
    group("gen", "the canonical generic sequence");
    std::string lam;
    {
        auto* s = verb("gen", "in-filter", "is p in the filter of the canonical sequence");
        s->add_option("condition", c1)->required();
        with_index(s);
        handlers["gen in-filter"] = [&] {
            Condition p = load_condition(c1);
            CanonicalSequence c{p.u->lambda0, opt_set(index)};
            std::string why;
            bool b = in_filter(p, c, &why);
            Out o = verdict(b, {{"condition", io::to_json(p)}, {"index", c.restriction ? json(c.restriction->str()) : json(nullptr)}});
            if (!b) o.text = "false: " + why;
            return o;
        };
        s = verb("gen", "otp", "order type of the sequence inside (a, b)");
        s->add_option("--lambda0", lam, "length of the sequence")->required();
        s->add_option("a", oa)->required();
        s->add_option("b", ob)->required();
        with_index(s);
        handlers["gen otp"] = [&] {
            CanonicalSequence c{parse_ordinal(lam), opt_set(index)};
            Ordinal a = parse_ordinal(oa), b = parse_ordinal(ob);
            return Out{{{"lambda0", c.lambda0.str()}, {"a", a.str()}, {"b", b.str()}, {"index", c.restriction ? json(c.restriction->str()) : json(nullptr)}},
                       interval_otp(c, a, b).str()};
        };
        s = verb("gen", "compatible", "common extension of two filter members");
        s->add_option("p", c1)->required();
        s->add_option("q", c2)->required();
        with_index(s);
        handlers["gen compatible"] = [&] {
            Condition p = load_condition(c1), q = load_condition(c2);
            CanonicalSequence c{p.u->lambda0, opt_set(index)};
            Compatibility r = filter_pair_compatible(p, q, c);
            Out o{{{"p", io::to_json(p)}, {"q", io::to_json(q)}},
                  {{"ok", r.ok}, {"witness", r.witness ? io::to_json(*r.witness) : json(nullptr)}, {"message", r.message}},
                  r.ok ? 0 : 1};
            return o;
        };
    }

    // ---------------------------------------------------------- ramsey
    group("ramsey", "finite homogeneity searches");
    std::string table, mins;
    {
        auto* s = verb("ramsey", "homog", "homogeneous sub-product");
        s->add_option("table", table)->required();
        s->add_option("--min", mins, "comma separated minimum sizes")->required();
        handlers["ramsey homog"] = [&] {
            FiniteProductFn f = io::product_fn_from(load_doc(table).j);
            auto v = check_table(f);
            if (!v.empty()) throw io::InputError(v.front());
            auto r = homogenize(f, parse_sizes(mins));
            Out o{{{"table", io::to_json(f)}, {"min", parse_sizes(mins)}}, nullptr, r ? 0 : 1};
            o.result = r ? json{{"found", true}, {"h", r->h}, {"color", r->color}} : json{{"found", false}};
            return o;
        };
        s = verb("ramsey", "important", "important coordinates");
        s->add_option("table", table)->required();
        s->add_option("--min", mins, "comma separated minimum sizes")->required();
        handlers["ramsey important"] = [&] {
            FiniteProductFn f = io::product_fn_from(load_doc(table).j);
            auto v = check_table(f);
            if (!v.empty()) throw io::InputError(v.front());
            auto r = important_coordinates(f, parse_sizes(mins));
            Out o{{{"table", io::to_json(f)}, {"min", parse_sizes(mins)}}, nullptr, r ? 0 : 1};
            if (r) {
                std::vector<std::size_t> one_based;
                for (auto k : r->coords) one_based.push_back(k + 1);
                o.result = {{"found", true}, {"h", r->h}, {"coords", one_based}};
            } else {
                o.result = {{"found", false}};
            }
            return o;
        };
    }

    // ---------------------------------------------------------- prikry
    group("prikry", "tree Prikry forcing toys");
    std::string sfile, t1, t2, extra, fname, node;
    std::size_t level = 0, bound = 0;
    {
        auto* s = verb("prikry", "validate", "check a tree condition");
        s->add_option("structure", sfile)->required();
        s->add_option("tree", t1)->required();
        handlers["prikry validate"] = [&] {
            auto u = io::structure_from(load_doc(sfile).j);
            auto t = io::tree_from(load_doc(t1).j);
            auto v = u.check();
            auto w = prikry::validate_tree(t, u);
            v.insert(v.end(), w.begin(), w.end());
            return violations(v, {{"structure", io::to_json(u)}, {"tree", io::to_json(t)}});
        };
        s = verb("prikry", "leq", "is t stronger than s");
        s->add_option("structure", sfile)->required();
        s->add_option("s", t1)->required();
        s->add_option("t", t2)->required();
        s->add_flag("--star", star, "direct extension");
        handlers["prikry leq"] = [&] {
            auto u = io::structure_from(load_doc(sfile).j);
            auto a = io::tree_from(load_doc(t1).j), b = io::tree_from(load_doc(t2).j);
            bool r = star ? prikry::leq_star_tree(a, b, u) : prikry::leq_tree(a, b, u);
            return verdict(r, {{"structure", io::to_json(u)}, {"s", io::to_json(a)}, {"t", io::to_json(b)}, {"star", star}});
        };
        s = verb("prikry", "normalize", "prune to the projection-chain dense set");
        s->add_option("structure", sfile)->required();
        s->add_option("tree", t1)->required();
        handlers["prikry normalize"] = [&] {
            auto u = io::structure_from(load_doc(sfile).j);
            auto t = io::tree_from(load_doc(t1).j);
            return Out{{{"structure", io::to_json(u)}, {"tree", io::to_json(t)}}, io::to_json(prikry::normalize_dense(t, u))};
        };
        s = verb("prikry", "seq-validate", "condition of the sequence or single-ultrafilter forcing");
        s->add_option("document", t1)->required();
        handlers["prikry seq-validate"] = [&] {
            json j = load_doc(t1).j;
            std::vector<prikry::Measure> ms;
            for (const auto& m : j.at("measures")) ms.push_back(io::measure_from(m));
            std::vector<prikry::IntSet> sets = j.at("sets").get<std::vector<prikry::IntSet>>();
            auto r = prikry::validate_sequence_condition(j.at("p").get<prikry::Seq>(), sets, ms);
            Out o = violations(r.violations, j);
            json lv = json::array();
            for (const auto& [n, h] : r.min_clause) lv.push_back({{"level", n}, {"holds", h}});
            o.result["min_clause"] = lv;
            return o;
        };
        s = verb("prikry", "diag", "modified diagonal intersection");
        s->add_option("document", t1)->required();
        handlers["prikry diag"] = [&] {
            json j = load_doc(t1).j;
            std::map<int, prikry::IntSet> fam;
            for (const auto& e : j.at("family")) fam[e.at(0).get<int>()] = e.at(1).get<prikry::IntSet>();
            std::map<int, int> p;
            if (j.contains("pi"))
                for (const auto& e : j.at("pi")) p[e.at(0).get<int>()] = e.at(1).get<int>();
            return Out{j, json(prikry::modified_diag(j.at("ground").get<prikry::Seq>(), fam, p))};
        };
        s = verb("prikry", "limit-member", "membership in the iterated limit U_n");
        s->add_option("structure", sfile)->required();
        s->add_option("tuples", t1, "JSON list of increasing tuples")->required();
        handlers["prikry limit-member"] = [&] {
            auto u = io::structure_from(load_doc(sfile).j);
            json x = load_doc(t1).j;
            prikry::TupleSet ts = x.get<prikry::TupleSet>();
            if (ts.empty()) throw io::InputError("empty tuple list has no length");
            std::size_t n = ts.begin()->size();
            for (const auto& t : ts)
                if (t.size() != n) throw io::InputError("tuples of different lengths");
            return verdict(prikry::limit_member(u, ts, n), {{"structure", io::to_json(u)}, {"tuples", x}});
        };
        s = verb("prikry", "p-point", "P-point test against a supplied function family");
        s->add_option("structure", sfile)->required();
        s->add_option("family", t1, "JSON list of functions, each a list of [x, f(x)] pairs")->required();
        s->add_option("--node", node, "JSON node sequence")->default_val("[]");
        s->add_option("--bound", bound, "fibre bound")->required();
        handlers["prikry p-point"] = [&] {
            auto u = io::structure_from(load_doc(sfile).j);
            json fj = load_doc(t1).j;
            std::vector<prikry::PointFn> fam;
            for (const auto& f : fj) {
                prikry::PointFn pf;
                for (const auto& e : f) pf[e.at(0).get<int>()] = e.at(1).get<int>();
                fam.push_back(pf);
            }
            prikry::Seq a = json::parse(node).get<prikry::Seq>();
            return verdict(prikry::is_p_point(u, a, fam, bound), {{"structure", io::to_json(u)}, {"family", fj}, {"node", a}, {"bound", bound}});
        };
        s = verb("prikry", "derive", "apply a derivation to a branch and report its profile");
        s->add_option("document", t1, "{levels, functions, branch}")->required();
        handlers["prikry derive"] = [&] {
            json j = load_doc(t1).j;
            prikry::Derivation d;
            d.levels = j.at("levels").get<std::vector<std::size_t>>();
            for (const auto& f : j.at("functions")) {
                auto g = named_tuple_fn(f.get<std::string>());
                d.fns.push_back([g](const prikry::Seq& t) { return g(t).at(0); });
            }
            auto alphas = prikry::apply_derivation(d, j.at("branch").get<prikry::Seq>());
            auto pr = prikry::derivation_profile(d.levels);
            return Out{j, {{"alpha", alphas}, {"levels", pr.levels}, {"multiplicity", pr.multiplicity}, {"first_index", pr.first_index}}};
        };
        s = verb("prikry", "project", "membership in F_* U_n");
        s->add_option("structure", sfile)->required();
        s->add_option("--fn", fname, "id, first, last, sum, max, min, const:c, coord:k")->required();
        s->add_option("--level", level, "n")->required();
        s->add_option("tuples", t1, "JSON list of image tuples")->required();
        handlers["prikry project"] = [&] {
            auto u = io::structure_from(load_doc(sfile).j);
            json x = load_doc(t1).j;
            prikry::TupleSet ts = x.get<prikry::TupleSet>();
            bool r = prikry::project_member(u, named_tuple_fn(fname), level, ts);
            return verdict(r, {{"structure", io::to_json(u)}, {"fn", fname}, {"level", level}, {"tuples", x}});
        };
    }

    // registry and dispatch table must agree
    for (const auto& e : kOperations)
        if (!handlers.count(std::string(e.verb))) {
            std::cerr << "internal: registry verb without handler: " << e.verb << "\n";
            return 2;
        }

    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        if (machine) std::cout << json{{"schema", "workbench/error/v1"}, {"error", kind}, {"message", msg}}.dump() << "\n";
        else std::cerr << kind << ": " << msg << "\n";
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(2, "usage", e.what());
    }

    if (list_verbs) {
        if (machine) {
            json a = json::array();
            for (const auto& e : kOperations) a.push_back({{"module", e.module}, {"op", e.op}, {"verb", e.verb}});
            std::cout << json{{"schema", "workbench/verbs/v1"}, {"verbs", a}}.dump() << "\n";
        } else {
            for (const auto& e : kOperations) std::cout << e.verb << "\t" << e.module << "::" << e.op << "\n";
        }
        return 0;
    }
    if (run_self_test) {
        std::uint64_t seed = 20240601;
        if (const char* s = std::getenv("WORKBENCH_SEED")) seed = std::strtoull(s, nullptr, 10);
        std::mt19937_64 rng(seed);
        return self_test(rng, seed);
    }

    std::string chosen;
    for (const auto& [name, sub] : leaves)
        if (sub->parsed()) chosen = name;
    if (chosen.empty()) {
        std::cerr << app.help();
        return 2;
    }

    try {
        Out o = handlers.at(chosen)();
        if (machine) {
            std::string tag = chosen;
            std::replace(tag.begin(), tag.end(), ' ', '/');
            json doc = {{"schema", "workbench/" + tag + "/v1"}, {"verb", chosen}, {"input", o.input}, {"result", o.result}, {"status", o.code}};
            std::cout << doc.dump() << "\n";
        } else if (!o.text.empty()) {
            std::cout << o.text << "\n";
        } else if (o.result.is_string()) {
            std::cout << o.result.get<std::string>() << "\n";
        } else if (o.result.is_boolean()) {
            std::cout << bool_word(o.result.get<bool>()) << "\n";
        } else {
            std::cout << o.result.dump(2) << "\n";
        }
        return o.code;
    } catch (const ParseError& e) {
        return fail(2, "parse error", e.what());
    } catch (const io::InputError& e) {
        return fail(2, "input error", e.what());
    } catch (const DifferenceUndefined& e) {
        return fail(2, "DifferenceUndefined", e.what());
    } catch (const Undefined& e) {
        return fail(2, "Undefined", e.what());
    } catch (const json::exception& e) {
        return fail(2, "input error", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(2, "input error", e.what());
    } catch (const ConditionError& e) {
        return fail(1, e.code(), e.what());
    } catch (const prikry::PrikryError& e) {
        return fail(1, e.code(), e.what());
    } catch (const ClosureDidNotStabilize& e) {
        return fail(1, "ClosureDidNotStabilize", e.what());
    }
}
