#ifndef WORKBENCH_MAGIDOR_HPP
#define WORKBENCH_MAGIDOR_HPP

// Magidor conditions over a toy universe.  Block 0 (the ordinal 0) is the
// implicit bottom and never appears in the list; the last block is the top.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "workbench/universe.hpp"

namespace wb {

class ConditionError : public std::runtime_error {
public:
    explicit ConditionError(const std::string& code, const std::string& detail = "")
        : std::runtime_error(code + (detail.empty() ? "" : ": " + detail)), code_(code) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Block {
    Ordinal kappa;
    std::optional<OrdinalSet> B;
};

struct Condition {
    std::shared_ptr<const ToyUniverse> u;
    std::vector<Block> blocks;  // last is the top
    Ordinal floor;              // kappa of the implicit bottom block; 0 unless this is an upper split

    std::size_t size() const { return blocks.size(); }
    const Block& top() const { return blocks.back(); }
    Ordinal kappa_before(std::size_t i) const { return i == 0 ? floor : blocks[i - 1].kappa; }
};

// gap i holds the points added between block i-1 and block i (0-based blocks)
using Assignment = std::vector<std::vector<Ordinal>>;
using TypeVec = std::vector<std::vector<Ordinal>>;

inline Ordinal ord_of(const Block& b) { return limit_order(b.kappa); }

inline bool same_universe(const Condition& a, const Condition& b) {
    if (a.u == b.u) return true;
    if (!a.u || !b.u) return false;
    if (a.u->lambda0 != b.u->lambda0 || a.u->delta0_bound != b.u->delta0_bound) return false;
    if (a.u->cores.size() != b.u->cores.size()) return false;
    auto it = b.u->cores.begin();
    for (const auto& [k, v] : a.u->cores) {
        if (k != it->first || v != it->second) return false;
        ++it;
    }
    return true;
}

inline std::vector<std::string> validate(const Condition& p) {
    std::vector<std::string> v;
    if (!p.u) return {"missing universe"};
    if (p.blocks.empty()) {
        if (p.floor != p.u->lambda0) v.push_back("no top block");
        return v;
    }
    if (p.top().kappa != p.u->lambda0) v.push_back("top kappa differs from lambda0");
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Block& b = p.blocks[i];
        std::string at = "block " + std::to_string(i + 1) + " (" + b.kappa.str() + ")";
        Ordinal prev = p.kappa_before(i);
        if (!(b.kappa > prev)) v.push_back(at + ": kappa not increasing");
        Ordinal o = ord_of(b);
        if (!(o < p.u->delta0_bound)) v.push_back(at + ": order not below delta0_bound");
        if (o.is_zero()) {
            if (b.B) v.push_back(at + ": unexpected measure set on an order-0 point");
            continue;
        }
        if (!b.B) {
            v.push_back(at + ": missing measure set");
            continue;
        }
        const OrdinalSet& B = *b.B;
        if (!B.subset_of(OrdinalSet::interval(Ordinal(), b.kappa))) v.push_back(at + ": set not below kappa");
        if (auto m = B.min(); m && !(*m > prev)) v.push_back(at + ": min of set not above previous kappa");
        if (!is_large_all(*p.u, B, b.kappa)) v.push_back(at + ": set not large");
        else if (B != stratified(*p.u, B, b.kappa)) v.push_back(at + ": not stratified");
    }
    return v;
}

inline Ordinal gamma_of(const Condition& p, std::size_t i) {  // i in 0..size, 1-based block index
    if (i > p.size()) throw std::out_of_range("block index out of range");
    Ordinal g;
    for (std::size_t j = 0; j < i; ++j) g = add(g, omega_power(ord_of(p.blocks[j])));
    return g;
}

// Positions in q of p's blocks, or nullopt when some kappa of p is missing.
inline std::optional<std::vector<std::size_t>> match_blocks(const Condition& p, const Condition& q) {
    std::vector<std::size_t> idx;
    std::size_t j = 0;
    for (const auto& b : p.blocks) {
        while (j < q.size() && q.blocks[j].kappa < b.kappa) ++j;
        if (j == q.size() || q.blocks[j].kappa != b.kappa) return std::nullopt;
        idx.push_back(j++);
    }
    if (!idx.empty() && idx.back() != q.size() - 1) return std::nullopt;
    return idx;
}

// p <= q: q extends p.
inline bool leq(const Condition& p, const Condition& q) {
    if (!same_universe(p, q)) throw ConditionError("UniverseMismatch");
    if (p.size() > q.size()) return false;
    auto idx = match_blocks(p, q);
    if (!idx) return false;
    std::size_t r = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        const Block& s = q.blocks[j];
        if (r < idx->size() && (*idx)[r] == j) {
            const Block& t = p.blocks[r];
            if (t.B.has_value() != s.B.has_value()) return false;
            if (t.B && !s.B->subset_of(*t.B)) return false;
            ++r;
            continue;
        }
        const Block& t = p.blocks[r];  // s sits in the gap below t
        if (!t.B || !t.B->contains(s.kappa)) return false;
        if (!(ord_of(s) < ord_of(t))) return false;
        if (s.B && !s.B->subset_of(t.B->below(s.kappa))) return false;
    }
    return true;
}

inline bool leq_star(const Condition& p, const Condition& q) { return p.size() == q.size() && leq(p, q); }

inline TypeVec type_of(const Condition& p, const Assignment& a) {
    if (a.size() != p.size()) throw ConditionError("BadShape", "one gap per block expected");
    TypeVec x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Ordinal prev = p.kappa_before(i);
        for (const auto& al : a[i]) {
            if (!(al > prev) || !(al < p.blocks[i].kappa)) throw ConditionError("NotIncreasing", al.str());
            if (!p.blocks[i].B || !p.blocks[i].B->contains(al)) throw ConditionError("PointNotInMeasureSet", al.str());
            x[i].push_back(limit_order(al));
            prev = al;
        }
    }
    return x;
}

using Shrink = std::vector<std::optional<OrdinalSet>>;

// p with the points of `a` added.  Each new point of positive order takes the
// measure set of its block cut to its own interval; the block keeps what lies
// above its last new point.  `shrink` (indexed by result block) intersects sets.
inline Condition extend(const Condition& p, const Assignment& a, const Shrink& shrink = {}) {
    type_of(p, a);  // shape and membership checks
    const ToyUniverse& u = *p.u;
    Condition out{p.u, {}, p.floor};
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Block& t = p.blocks[i];
        Ordinal prev = p.kappa_before(i);
        for (const auto& al : a[i]) {
            Block nb{al, std::nullopt};
            if (!limit_order(al).is_zero()) nb.B = stratified(u, t.B->between(prev, al), al);
            out.blocks.push_back(std::move(nb));
            prev = al;
        }
        Block nt = t;
        if (nt.B && !a[i].empty()) nt.B = nt.B->above(prev);
        out.blocks.push_back(std::move(nt));
    }
    if (!shrink.empty()) {
        if (shrink.size() != out.size()) throw ConditionError("BadShape", "shrink list length");
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (!shrink[k]) continue;
            Block& b = out.blocks[k];
            if (!b.B) throw ConditionError("BadShape", "shrinking an order-0 block");
            b.B = set_inter(*b.B, *shrink[k]);
        }
    }
    for (auto& b : out.blocks) {
        if (!b.B) continue;
        if (!is_large_all(u, *b.B, b.kappa)) throw ConditionError("LargenessViolated", b.kappa.str());
        b.B = stratified(u, *b.B, b.kappa);
        if (!is_large_all(u, *b.B, b.kappa)) throw ConditionError("LargenessViolated", b.kappa.str());
    }
    return out;
}

struct FoundType {
    TypeVec type;
    Assignment points;
};

inline FoundType find_type(const Condition& p, const Condition& q) {
    if (!leq(p, q)) throw ConditionError("NotAnExtension");
    auto idx = *match_blocks(p, q);
    FoundType f;
    f.points.resize(p.size());
    f.type.resize(p.size());
    std::size_t r = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (idx[r] == j) {
            ++r;
            continue;
        }
        f.points[r].push_back(q.blocks[j].kappa);
        f.type[r].push_back(ord_of(q.blocks[j]));
    }
    return f;
}

// The type that unveils coordinate gamma as a new maximal point of its gap.
inline TypeVec unveil_type(const Condition& p, const Ordinal& gamma) {
    Ordinal lo;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Ordinal hi = add(lo, omega_power(ord_of(p.blocks[i])));
        if (gamma == hi) throw ConditionError("AlreadyUnveiled", gamma.str());
        if (lo < gamma && gamma < hi) {
            TypeVec x(p.size());
            x[i] = cnf_difference(lo, gamma);
            return x;
        }
        if (gamma == lo) throw ConditionError("AlreadyUnveiled", gamma.str());
        lo = hi;
    }
    throw ConditionError("OutOfRange", gamma.str());
}

// Least admissible points realising type x.
inline Assignment minimal_witnesses(const Condition& p, const TypeVec& x) {
    if (x.size() != p.size()) throw ConditionError("BadShape", "one gap per block expected");
    Assignment a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].empty()) continue;
        const Block& t = p.blocks[i];
        if (!t.B) throw ConditionError("WitnessUnavailable", "block has no measure set");
        Ordinal prev = p.kappa_before(i);
        for (const auto& xi : x[i]) {
            if (!(xi < ord_of(t))) throw ConditionError("WitnessUnavailable", "order too large");
            auto m = set_inter(*t.B, OrdinalSet::with_order(xi)).min_gt(prev);
            if (!m) throw ConditionError("WitnessUnavailable", "empty stratum");
            a[i].push_back(*m);
            prev = *m;
        }
    }
    return a;
}

inline Condition extend_minimal(const Condition& p, const TypeVec& x) { return extend(p, minimal_witnesses(p, x)); }

// Replace every measure set by its stratified form.
inline Condition stratify_condition(const Condition& p) {
    Condition q = p;
    for (auto& b : q.blocks)
        if (b.B) b.B = stratified(*p.u, *b.B, b.kappa);
    return q;
}

struct SplitPair {
    Condition lower, upper;
};

// Lower part lives over the universe cut at kappa of block i (1-based).
inline SplitPair split_at(const Condition& p, std::size_t i) {
    if (i == 0 || i > p.size()) throw ConditionError("BadCut", "index out of range");
    const Block& b = p.blocks[i - 1];
    if (!b.B) throw ConditionError("BadCut", "cut block has order 0");
    auto lu = std::make_shared<ToyUniverse>(*p.u);
    lu->lambda0 = b.kappa;
    for (auto it = lu->cores.begin(); it != lu->cores.end();)
        it = it->first.first > b.kappa ? lu->cores.erase(it) : std::next(it);
    SplitPair s;
    s.lower = Condition{lu, std::vector<Block>(p.blocks.begin(), p.blocks.begin() + static_cast<std::ptrdiff_t>(i)), p.floor};
    s.upper = Condition{p.u, std::vector<Block>(p.blocks.begin() + static_cast<std::ptrdiff_t>(i), p.blocks.end()), b.kappa};
    return s;
}

inline Condition join(const Condition& lower, const Condition& upper) {
    if (lower.blocks.empty() || lower.top().kappa != upper.floor) throw ConditionError("BadCut", "parts do not meet");
    Condition out{upper.u, lower.blocks, lower.floor};
    out.blocks.insert(out.blocks.end(), upper.blocks.begin(), upper.blocks.end());
    return out;
}

// Root condition: just the top with the canonical set.
inline Condition root_condition(std::shared_ptr<const ToyUniverse> u) {
    Condition p{u, {}, Ordinal()};
    p.blocks.push_back(Block{u->lambda0, canonical_set(*u, u->lambda0, Ordinal())});
    return p;
}

// One block per term of the normal form of lambda0, at its partial sums.
inline Condition cnf_root_condition(std::shared_ptr<const ToyUniverse> u) {
    Condition p{u, {}, Ordinal()};
    Ordinal prev;
    for (const auto& e : cnf_difference(Ordinal(), u->lambda0)) {
        Ordinal k = add(prev, omega_power(e));
        Block b{k, std::nullopt};
        if (!e.is_zero()) b.B = canonical_set(*u, k, prev);
        p.blocks.push_back(std::move(b));
        prev = k;
    }
    return p;
}

}  // namespace wb

#endif
