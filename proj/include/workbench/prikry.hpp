#ifndef WORKBENCH_PRIKRY_HPP
#define WORKBENCH_PRIKRY_HPP

// Tree Prikry forcing over a finite ground with principal (core generated)
// filters standing in for the measures U_a.  Node a only sees points above
// max(a), so a set is large at a when it holds every core point above max(a).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb::prikry {

using Seq = std::vector<int>;
using IntSet = std::set<int>;

class PrikryError : public std::runtime_error {
public:
    explicit PrikryError(const std::string& code, const std::string& detail = "")
        : std::runtime_error(code + (detail.empty() ? "" : ": " + detail)), code_(code) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Measure {
    IntSet core;
    std::map<int, int> pi;  // missing entries are the identity

    int project(int v) const {
        auto it = pi.find(v);
        return it == pi.end() ? v : it->second;
    }
    bool normal() const {
        return std::all_of(pi.begin(), pi.end(), [](const auto& kv) { return kv.first == kv.second; });
    }
};

inline int seq_max(const Seq& a) { return a.empty() ? -1 : a.back(); }

struct ToyUltraStructure {
    Seq ground;                      // sorted
    std::map<Seq, Measure> nodes;    // explicit U_a
    Measure fallback;                // every other node

    const Measure& at(const Seq& a) const {
        auto it = nodes.find(a);
        return it == nodes.end() ? fallback : it->second;
    }
    IntSet tail_core(const Seq& a) const {
        IntSet s;
        for (int v : at(a).core)
            if (v > seq_max(a)) s.insert(v);
        return s;
    }
    bool large(const Seq& a, const IntSet& s) const {
        for (int v : tail_core(a))
            if (!s.count(v)) return false;
        return true;
    }
    bool in_ground(int v) const { return std::binary_search(ground.begin(), ground.end(), v); }

    std::vector<std::string> check() const {
        std::vector<std::string> out;
        if (!std::is_sorted(ground.begin(), ground.end())) out.push_back("ground not sorted");
        auto one = [&](const std::string& at, const Measure& m) {
            if (m.core.empty()) out.push_back(at + ": empty core");
            for (int v : m.core)
                if (!in_ground(v)) out.push_back(at + ": core point outside ground");
            for (const auto& [v, p] : m.pi)
                if (p > v) out.push_back(at + ": projection above the identity at " + std::to_string(v));
        };
        one("fallback", fallback);
        for (const auto& [a, m] : nodes) one("node of length " + std::to_string(a.size()), m);
        return out;
    }
};

// ---------------------------------------------------------------- trees

struct TreeCondition {
    Seq trunk;
    std::map<Seq, IntSet> explicit_sets;  // nodes extending the trunk, below trunk size + depth
    std::size_t depth = 0;
    bool normalized_default = false;      // default fill also demands pi_a(v) > max(a)
};

inline IntSet successors(const TreeCondition& t, const ToyUltraStructure& u, const Seq& a) {
    auto it = t.explicit_sets.find(a);
    if (it != t.explicit_sets.end()) return it->second;
    IntSet s = u.tail_core(a);
    if (t.normalized_default) {
        const Measure& m = u.at(a);
        for (auto i = s.begin(); i != s.end();) i = m.project(*i) > seq_max(a) ? std::next(i) : s.erase(i);
    }
    return s;
}

inline bool extends(const Seq& a, const Seq& prefix) {
    return a.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), a.begin());
}

// Nodes of the tree above the trunk, up to `levels` steps beyond it.
inline std::vector<Seq> tree_nodes(const TreeCondition& t, const ToyUltraStructure& u, std::size_t levels,
                                   std::size_t cap = 1u << 18) {
    std::vector<Seq> out{t.trunk};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() >= t.trunk.size() + levels) continue;
        for (int v : successors(t, u, out[i])) {
            Seq b = out[i];
            b.push_back(v);
            out.push_back(std::move(b));
            if (out.size() > cap) throw PrikryError("DepthMismatch", "tree too large to compare exhaustively");
        }
    }
    return out;
}

inline std::vector<std::string> validate_tree(const TreeCondition& t, const ToyUltraStructure& u) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < t.trunk.size(); ++i) {
        if (!u.in_ground(t.trunk[i])) v.push_back("trunk point outside ground");
        if (i && t.trunk[i] <= t.trunk[i - 1]) v.push_back("trunk not increasing");
    }
    for (const auto& [a, s] : t.explicit_sets) {
        if (!extends(a, t.trunk)) v.push_back("explicit node does not extend the trunk");
        if (a.size() >= t.trunk.size() + t.depth) v.push_back("explicit node beyond the declared depth");
        if (!std::is_sorted(a.begin(), a.end()) || std::adjacent_find(a.begin(), a.end()) != a.end())
            v.push_back("explicit node not increasing");
        for (int x : s)
            if (!u.in_ground(x) || x <= seq_max(a)) v.push_back("successor outside ground or not above the node");
    }
    for (const auto& a : tree_nodes(t, u, u.ground.size()))
        if (!u.large(a, successors(t, u, a))) {
            v.push_back("successor set not large at a node of length " + std::to_string(a.size()));
            break;
        }
    return v;
}

// s <= t: t is stronger.
inline bool leq_tree(const TreeCondition& s, const TreeCondition& t, const ToyUltraStructure& u) {
    if (!extends(t.trunk, s.trunk)) return false;
    for (std::size_t i = s.trunk.size(); i < t.trunk.size(); ++i) {
        Seq a(t.trunk.begin(), t.trunk.begin() + static_cast<std::ptrdiff_t>(i));
        if (!successors(s, u, a).count(t.trunk[i])) return false;
    }
    for (const auto& a : tree_nodes(t, u, u.ground.size())) {
        IntSet ss = successors(s, u, a);
        for (int x : successors(t, u, a))
            if (!ss.count(x)) return false;
    }
    return true;
}

inline bool leq_star_tree(const TreeCondition& s, const TreeCondition& t, const ToyUltraStructure& u) {
    return s.trunk == t.trunk && leq_tree(s, t, u);
}

// Does every step of the node satisfy pi_b(next) > max(b)?
inline bool chain_normal(const Seq& a, const ToyUltraStructure& u) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        Seq b(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
        if (!(u.at(b).project(a[i]) > seq_max(b))) return false;
    }
    return true;
}

inline TreeCondition normalize_dense(const TreeCondition& t, const ToyUltraStructure& u) {
    if (!chain_normal(t.trunk, u)) throw PrikryError("TrunkNotNormal", "the trunk itself breaks the projection chain");
    TreeCondition out{t.trunk, {}, t.depth, true};
    std::vector<Seq> todo{t.trunk};
    for (std::size_t i = 0; i < todo.size(); ++i) {
        const Seq a = todo[i];  // todo grows below
        const Measure& m = u.at(a);
        IntSet kept;
        for (int x : successors(t, u, a))
            if (m.project(x) > seq_max(a)) kept.insert(x);
        if (!u.large(a, kept)) throw PrikryError("PruneBrokeLargeness", "node of length " + std::to_string(a.size()));
        out.explicit_sets[a] = kept;
        if (a.size() + 1 >= t.trunk.size() + t.depth) continue;
        for (int x : kept) {
            Seq b = a;
            b.push_back(x);
            todo.push_back(std::move(b));
        }
    }
    // below the explicit part the default fill now prunes too; it must stay large
    for (const auto& a : tree_nodes(out, u, u.ground.size()))
        if (!u.large(a, successors(out, u, a))) throw PrikryError("PruneBrokeLargeness", "default fill");
    return out;
}

// ------------------------------------------------- sequence variants

struct SeqReport {
    std::vector<std::string> violations;
    std::vector<std::pair<std::size_t, bool>> min_clause;  // (level n, holds)
    bool ok() const { return violations.empty(); }
};

// omega-sequence variant: measures V_1, V_2, ... (the last repeats), sets A_n
// for |p| < n <= |p| + sets.size().
inline SeqReport validate_sequence_condition(const Seq& p, const std::vector<IntSet>& sets,
                                             const std::vector<Measure>& measures) {
    if (measures.empty()) throw PrikryError("BadShape", "no measures");
    auto v = [&](std::size_t n) -> const Measure& { return measures[std::min(n, measures.size()) - 1]; };
    SeqReport r;
    for (std::size_t i = 1; i <= p.size(); ++i)
        for (std::size_t j = 1; j < i; ++j)
            if (!(p[j - 1] < v(i).project(p[i - 1])))
                r.violations.push_back("(1) nu_" + std::to_string(j) + " not below pi_" + std::to_string(i) + "(nu_" +
                                       std::to_string(i) + ")");
    int mx = seq_max(p);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        std::size_t n = p.size() + 1 + k;
        const Measure& m = v(n);
        for (int c : m.core)
            if (!sets[k].count(c)) {
                r.violations.push_back("(2) A_" + std::to_string(n) + " misses a core point");
                break;
            }
        bool holds = !sets[k].empty() && m.project(*sets[k].begin()) > mx;
        r.min_clause.emplace_back(n, holds);
        if (!holds) r.violations.push_back("(3) level " + std::to_string(n) + ": pi(min A) not above max(p)");
    }
    return r;
}

inline SeqReport validate_single_condition(const Seq& p, const IntSet& a, const Measure& m) {
    return validate_sequence_condition(p, {a}, {m});
}

// ------------------------------------------------- diagonal intersections

// {v | for all alpha < pi(v): v in A_alpha}; alphas missing from the family count as the ground.
inline IntSet modified_diag(const Seq& ground, const std::map<int, IntSet>& family, const std::map<int, int>& pi) {
    IntSet out;
    for (int v : ground) {
        auto pit = pi.find(v);
        int bound = pit == pi.end() ? v : pit->second;
        bool in = true;
        for (auto it = family.begin(); it != family.end() && it->first < bound; ++it)
            if (!it->second.count(v)) {
                in = false;
                break;
            }
        if (in) out.insert(v);
    }
    return out;
}

inline IntSet classical_diag(const Seq& ground, const std::map<int, IntSet>& family) {
    IntSet out;
    for (int v : ground) {
        bool in = true;
        for (const auto& [alpha, s] : family)
            if (alpha < v && !s.count(v)) in = false;
        if (in) out.insert(v);
    }
    return out;
}

// ------------------------------------------------- iterated limits

using TupleSet = std::set<Seq>;

// X in U_n (n = tuple length) by iterated sections: {v | X_v in U_{a^v}} in U_a.
inline bool limit_member(const ToyUltraStructure& u, const TupleSet& x, std::size_t n, const Seq& at = {}) {
    if (n == 0) return x.count(Seq{}) != 0;
    IntSet good;
    for (int v : u.tail_core(at)) {
        TupleSet sec;
        for (const auto& t : x)
            if (!t.empty() && t[0] == v) sec.insert(Seq(t.begin() + 1, t.end()));
        Seq b = at;
        b.push_back(v);
        if (limit_member(u, sec, n - 1, b)) good.insert(v);
    }
    return u.large(at, good);
}

// X in U_n^k (k 1-based): sets of points, tested through the k-th coordinate.
inline bool coordinate_member(const ToyUltraStructure& u, const IntSet& x, std::size_t n, std::size_t k,
                              const Seq& at = {}) {
    if (at.size() == n) return x.count(at[k - 1]) != 0;
    IntSet good;
    for (int v : u.tail_core(at)) {
        Seq b = at;
        b.push_back(v);
        if (coordinate_member(u, x, n, k, b)) good.insert(v);
    }
    return u.large(at, good);
}

inline std::vector<Seq> increasing_tuples_of(const Seq& ground, std::size_t n) {
    std::vector<Seq> out;
    Seq cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < ground.size(); ++i) {
            cur.push_back(ground[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

using TupleFn = std::function<Seq(const Seq&)>;

// X in F_* U_n iff the preimage of X is in U_n.
inline bool project_member(const ToyUltraStructure& u, const TupleFn& f, std::size_t n, const TupleSet& x) {
    TupleSet pre;
    for (const auto& t : increasing_tuples_of(u.ground, n))
        if (x.count(f(t))) pre.insert(t);
    return limit_member(u, pre, n);
}

// ------------------------------------------------- P-points

using PointFn = std::map<int, int>;  // total on the ground

// Every function non-constant on the core must have fibres of size <= bound
// on the core, the least large set.
inline bool is_p_point(const ToyUltraStructure& u, const Seq& a, const std::vector<PointFn>& family, std::size_t bound) {
    IntSet core = u.tail_core(a);
    for (const auto& f : family) {
        std::map<int, std::size_t> fib;
        for (int v : core) {
            auto it = f.find(v);
            if (it == f.end()) throw PrikryError("BadShape", "function not total on the core");
            ++fib[it->second];
        }
        if (fib.size() <= 1) continue;  // constant mod U
        for (const auto& [val, c] : fib)
            if (c > bound) return false;
    }
    return true;
}

// ------------------------------------------------- derived sequences

struct Derivation {
    std::vector<std::size_t> levels;        // n_k, non-decreasing
    std::vector<std::function<int(const Seq&)>> fns;
};

inline std::vector<int> apply_derivation(const Derivation& d, const Seq& branch) {
    if (d.levels.size() != d.fns.size()) throw PrikryError("BadShape", "one level per function");
    std::vector<int> out;
    for (std::size_t k = 0; k < d.levels.size(); ++k) {
        if (k && d.levels[k] < d.levels[k - 1]) throw PrikryError("NotNonDecreasing");
        if (d.levels[k] > branch.size()) throw PrikryError("BranchTooShort");
        out.push_back(d.fns[k](Seq(branch.begin(), branch.begin() + static_cast<std::ptrdiff_t>(d.levels[k]))));
    }
    return out;
}

struct Profile {
    std::vector<std::size_t> levels;        // distinct n_{k_i}
    std::vector<std::size_t> multiplicity;  // l_i
    std::vector<std::size_t> first_index;   // k_i
};

inline Profile derivation_profile(const std::vector<std::size_t>& levels) {
    Profile p;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (k && levels[k] < levels[k - 1]) throw PrikryError("NotNonDecreasing");
        if (p.levels.empty() || p.levels.back() != levels[k]) {
            p.levels.push_back(levels[k]);
            p.multiplicity.push_back(0);
            p.first_index.push_back(k);
        }
        ++p.multiplicity.back();
    }
    return p;
}

}  // namespace wb::prikry

#endif
