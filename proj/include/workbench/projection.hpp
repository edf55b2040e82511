#ifndef WORKBENCH_PROJECTION_HPP
#define WORKBENCH_PROJECTION_HPP

// Projection of Magidor conditions to the forcing that adds only the
// I-indexed subsequence, the dense set D on which it is a projection, and the
// constructive halves of the projection lemma.

#include "workbench/magidor.hpp"

namespace wb {

struct ICondition {
    Condition c;
    OrdinalSet I;
};

// Does the product S(g_1) x ... x S(g_k) meet the increasing tuples of (lo, hi)?
// Greedy least choice decides it.
inline std::optional<std::vector<Ordinal>> chain_in(const OrdinalSet& s, const std::vector<Ordinal>& exps,
                                                    const Ordinal& lo, const Ordinal& hi) {
    std::vector<Ordinal> out;
    Ordinal cur = lo;
    for (const auto& g : exps) {
        auto w = set_inter(s, OrdinalSet::with_order(g)).min_gt(cur);
        if (!w || !(*w < hi)) return std::nullopt;
        out.push_back(*w);
        cur = *w;
    }
    return out;
}

// least j in I with j > x and o_L(j) = c
inline std::optional<Ordinal> least_index_above(const OrdinalSet& I, const Ordinal& x, const Ordinal& c) {
    return set_inter(I, OrdinalSet::with_order(c)).min_gt(x);
}

// I(t_i, p) for every block (top included, literally); nullopt is N/A.
inline std::vector<std::optional<Ordinal>> index_of(const Condition& p, const OrdinalSet& I) {
    std::vector<std::optional<Ordinal>> out;
    std::optional<Ordinal> prev = Ordinal();
    for (const auto& b : p.blocks) {
        if (prev) prev = least_index_above(I, *prev, ord_of(b));
        out.push_back(prev);
    }
    return out;
}

inline bool defined_on(const Condition& p, const OrdinalSet& I) {
    auto idx = index_of(p, I);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (!idx[i]) return false;
    return true;
}

inline ICondition pi(const Condition& p, const OrdinalSet& I) {
    ICondition q{Condition{p.u, {}, p.floor}, I};
    Ordinal g;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        g = add(g, omega_power(ord_of(p.blocks[i])));
        if (!I.contains(g)) continue;
        Block b = p.blocks[i];
        if (!in_lim(I, g)) b.B.reset();
        q.c.blocks.push_back(std::move(b));
    }
    q.c.blocks.push_back(p.top());
    return q;
}

inline std::vector<std::string> validate_I(const ICondition& q) {
    std::vector<std::string> v;
    const Condition& c = q.c;
    if (!c.u) return {"missing universe"};
    if (c.blocks.empty()) return {"no top block"};
    const ToyUniverse& u = *c.u;
    if (!q.I.subset_of(OrdinalSet::interval(Ordinal(), u.lambda0))) v.push_back("index set not below lambda0");
    if (c.top().kappa != u.lambda0) v.push_back("(2) top kappa differs from lambda0");
    auto idx = index_of(c, q.I);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Block& b = c.blocks[i];
        bool top = i + 1 == c.size();
        std::string at = "block " + std::to_string(i + 1) + " (" + b.kappa.str() + ")";
        Ordinal prevk = c.kappa_before(i);
        if (!(b.kappa > prevk)) v.push_back("(2) " + at + ": kappa not increasing");
        if (top) {
            if (!b.B) {
                v.push_back("(3) top has no measure set");
            } else {
                if (!is_large_all(u, *b.B, b.kappa)) v.push_back("(3) top set not large");
                if (auto m = b.B->min(); m && !(*m > prevk)) v.push_back("(3) top set min not above previous kappa");
            }
            continue;
        }
        if (!idx[i]) {
            v.push_back("(1) " + at + ": index undefined");
            break;
        }
        Ordinal ix = *idx[i];
        Ordinal prev = i == 0 ? Ordinal() : *idx[i - 1];
        if (in_lim(q.I, ix)) {
            if (!b.B) {
                v.push_back("(2.b.i) " + at + ": Lim position without measure set");
            } else {
                if (!is_large_all(u, *b.B, b.kappa)) v.push_back("(2.b.i) " + at + ": set not large");
                else if (*b.B != stratified(u, *b.B, b.kappa)) v.push_back("(2.b.i) " + at + ": not stratified");
                if (auto m = b.B->min(); m && !(*m > prevk)) v.push_back("(2.b.iii) " + at + ": set min not above previous kappa");
            }
            if (add(prev, omega_power(ord_of(b))) != ix) v.push_back("(2.b.ii) " + at + ": gap is not a single omega power");
        } else {
            if (b.B) v.push_back("(2.a.i) " + at + ": Succ position carries a set");
            auto pr = predecessor_in(q.I, ix);
            if (!pr || *pr != prev) {
                v.push_back("(2.a.ii) " + at + ": previous index is not the predecessor");
                continue;
            }
            auto exps = cnf_difference(prev, ix);
            exps.pop_back();  // the last exponent is o(t_i) itself
            if (!chain_in(OrdinalSet::all(), exps, prevk, b.kappa)) v.push_back("(2.a.iii) " + at + ": no witness vector");
        }
    }
    return v;
}

inline void require_same_index(const ICondition& p, const ICondition& q) {
    if (p.I != q.I) throw ConditionError("IndexSetMismatch");
}

inline bool leq_I(const ICondition& p, const ICondition& q) {
    require_same_index(p, q);
    if (!same_universe(p.c, q.c)) throw ConditionError("UniverseMismatch");
    if (p.c.size() > q.c.size()) return false;
    auto idx = match_blocks(p.c, q.c);
    if (!idx) return false;
    auto qi = index_of(q.c, q.I);
    std::size_t r = 0;
    for (std::size_t j = 0; j < q.c.size(); ++j) {
        const Block& s = q.c.blocks[j];
        if ((*idx)[r] == j) {
            const Block& t = p.c.blocks[r];
            if (t.B) {
                if (!s.B || !s.B->subset_of(*t.B)) return false;
            }
            ++r;
            continue;
        }
        const Block& t = p.c.blocks[r];
        if (!t.B || !t.B->contains(s.kappa)) return false;  // (2.a)
        if (!qi[j]) return false;
        if (in_lim(q.I, *qi[j])) {
            if (!s.B || !s.B->subset_of(t.B->below(s.kappa))) return false;  // (2.c)
        } else {
            Ordinal prev = j == 0 ? Ordinal() : *qi[j - 1];
            if (!(prev < *qi[j])) return false;
            auto exps = cnf_difference(prev, *qi[j]);
            exps.pop_back();
            if (!chain_in(*t.B, exps, q.c.kappa_before(j), s.kappa)) return false;  // (2.b)
        }
    }
    return true;
}

inline bool leq_I_star(const ICondition& p, const ICondition& q) { return p.c.size() == q.c.size() && leq_I(p, q); }

struct DReport {
    bool ok = true;
    std::size_t block = 0;  // 1-based position in p of the failing block (size() for the top)
    int clause = 0;         // 1 Lim linkage, 2 Succ linkage, 0 not stratified
    Ordinal gamma;          // coordinate of the failing block
    std::string message;
};

// The top counts as a Lim(I) position whenever I is cofinal in lambda0.
inline DReport in_D(const Condition& p, const OrdinalSet& I) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Block& b = p.blocks[i];
        if (b.B && *b.B != stratified(*p.u, *b.B, b.kappa))
            return DReport{false, i + 1, 0, gamma_of(p, i + 1), "block not in stratified form"};
    }
    std::vector<std::size_t> proj;  // 1-based
    std::vector<Ordinal> gam(p.size() + 1);
    for (std::size_t i = 1; i <= p.size(); ++i) gam[i] = add(gam[i - 1], omega_power(ord_of(p.blocks[i - 1])));
    for (std::size_t i = 1; i < p.size(); ++i)
        if (I.contains(gam[i])) proj.push_back(i);
    const Ordinal lambda0 = p.u->lambda0;
    if (I.cofinal_below(lambda0)) {
        Ordinal last = proj.empty() ? Ordinal() : gam[proj.back()];
        if (last != gam[p.size() - 1])
            return DReport{false, p.size(), 1, gam[p.size()], "top: last projected block is not the block below the top"};
    }
    for (std::size_t j = proj.size(); j-- > 0;) {
        std::size_t i = proj[j];
        Ordinal prevp = j == 0 ? Ordinal() : gam[proj[j - 1]];
        if (in_lim(I, gam[i])) {
            if (prevp != gam[i - 1])
                return DReport{false, i, 1, gam[i], "clause 1: " + prevp.str() + " < " + gam[i - 1].str()};
        } else {
            auto pr = predecessor_in(I, gam[i]);
            if (!pr || *pr != prevp)
                return DReport{false, i, 2, gam[i],
                               "clause 2: predecessor is " + (pr ? pr->str() : std::string("unattained")) +
                                   " but previous projected coordinate is " + prevp.str()};
        }
    }
    return DReport{};
}

struct DensifyTrace {
    std::vector<Ordinal> failing_positions;
    std::vector<Ordinal> repairs;
};

inline Condition densify(const Condition& p0, const OrdinalSet& I, DensifyTrace* trace = nullptr, int cap = 10000) {
    Condition p = p0;
    std::optional<Ordinal> last;
    for (int pass = 0; pass < cap; ++pass) {
        DReport r = in_D(p, I);
        if (r.ok) return p;
        if (r.clause == 0) {
            p = stratify_condition(p);
            continue;
        }
        if (last && !(r.gamma < *last)) throw ConditionError("NonTermination", "failing position did not decrease");
        last = r.gamma;
        std::optional<Ordinal> target;
        if (r.clause == 1) {
            target = I.min_gt(gamma_of(p, r.block - 1));
            if (target && !(*target < r.gamma)) target.reset();
        } else {
            target = predecessor_in(I, r.gamma);
        }
        if (!target) throw ConditionError("RepairImpossible", r.message);
        if (trace) {
            trace->failing_positions.push_back(r.gamma);
            trace->repairs.push_back(*target);
        }
        try {
            p = extend_minimal(p, unveil_type(p, *target));
        } catch (const ConditionError& e) {
            if (e.code() == "WitnessUnavailable") throw ConditionError("RepairImpossible", e.what());
            throw;
        }
    }
    throw ConditionError("NonTermination", "iteration cap reached");
}

// A condition in D projecting onto q.  Succ blocks get a minimal witness vector
// and a canonical set; Lim blocks are copied.
inline Condition onto_construct(const ICondition& q) {
    const ToyUniverse& u = *q.c.u;
    auto idx = index_of(q.c, q.I);
    Condition p{q.c.u, {}, q.c.floor};
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        const Block& b = q.c.blocks[i];
        bool top = i + 1 == q.c.size();
        if (top || in_lim(q.I, *idx[i])) {
            p.blocks.push_back(b);
            continue;
        }
        Ordinal prev = i == 0 ? Ordinal() : *idx[i - 1];
        auto exps = cnf_difference(prev, *idx[i]);
        exps.pop_back();
        Ordinal floor = q.c.kappa_before(i);
        auto ws = chain_in(OrdinalSet::all(), exps, floor, b.kappa);
        if (!ws) throw ConditionError("WitnessUnavailable", b.kappa.str());
        for (const auto& w : *ws) {
            Block wb{w, std::nullopt};
            if (!limit_order(w).is_zero()) wb.B = canonical_set(u, w, floor);
            p.blocks.push_back(std::move(wb));
            floor = w;
        }
        Block nb{b.kappa, std::nullopt};
        if (!ord_of(b).is_zero()) nb.B = canonical_set(u, b.kappa, floor);
        p.blocks.push_back(std::move(nb));
    }
    return p;
}

// p' >= p with pi(p') = q, for p in D and pi(p) <=_I q.
inline Condition lift(const Condition& p, const ICondition& q) {
    ICondition pp = pi(p, q.I);
    if (!leq_I(pp, q)) throw ConditionError("NotAnExtension", "pi(p) is not below q");
    const ToyUniverse& u = *p.u;
    auto qi = index_of(q.c, q.I);
    Condition out{p.u, {}, p.floor};
    std::size_t j = 0;  // next q block
    for (const auto& b : p.blocks) {
        // blocks of q strictly below b that p lacks are interleaved into b's gap
        while (j < q.c.size() && q.c.blocks[j].kappa < b.kappa) {
            const Block& s = q.c.blocks[j];
            if (!b.B) throw ConditionError("WitnessUnavailable", "interleaved point below a bare block");
            Ordinal floor = out.blocks.empty() ? out.floor : out.blocks.back().kappa;
            if (!qi[j]) throw ConditionError("WitnessUnavailable", "index undefined");
            if (in_lim(q.I, *qi[j])) {
                if (auto m = s.B ? s.B->min() : std::nullopt; m && !(*m > floor))
                    throw ConditionError("WitnessUnavailable", "set reaches below an existing block");
                out.blocks.push_back(s);
            } else {
                Ordinal prev = j == 0 ? Ordinal() : *qi[j - 1];
                auto exps = cnf_difference(prev, *qi[j]);
                exps.pop_back();
                Ordinal lo = std::max(floor, q.c.kappa_before(j));
                auto ws = chain_in(*b.B, exps, lo, s.kappa);
                if (!ws) throw ConditionError("WitnessUnavailable", s.kappa.str());
                for (const auto& w : *ws) {
                    Block wb{w, std::nullopt};
                    if (!limit_order(w).is_zero()) wb.B = stratified(u, b.B->between(lo, w), w);
                    out.blocks.push_back(std::move(wb));
                    lo = w;
                }
                Block nb{s.kappa, std::nullopt};
                if (!ord_of(s).is_zero()) nb.B = stratified(u, b.B->between(lo, s.kappa), s.kappa);
                out.blocks.push_back(std::move(nb));
            }
            ++j;
        }
        Block nb = b;
        if (j < q.c.size() && q.c.blocks[j].kappa == b.kappa) {
            if (q.c.blocks[j].B) nb.B = q.c.blocks[j].B;
            ++j;
        }
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

inline bool correct_computation_check(const Condition& p, const OrdinalSet& I) {
    ICondition q = pi(p, I);
    auto idx = index_of(q.c, I);
    std::size_t j = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        Ordinal g = gamma_of(p, i);
        if (!I.contains(g)) continue;
        if (!idx[j] || *idx[j] != g) return false;
        ++j;
    }
    return true;
}

// Adjoin points (and their connecting coordinates) until every interval
// between consecutive roots meets cstar in an empty or unbounded set.
inline std::vector<Ordinal> refine_to_clubs(std::vector<Ordinal> roots, const OrdinalSet& cstar, int cap = 10000) {
    std::optional<Ordinal> last;
    for (int pass = 0; pass < cap; ++pass) {
        std::optional<std::size_t> bad;
        Ordinal s;
        for (std::size_t i = roots.size(); i-- > 0;) {
            Ordinal lo = i == 0 ? Ordinal() : roots[i - 1];
            OrdinalSet part = cstar.between(lo, roots[i]);
            if (part.is_empty()) continue;
            GreatestBelow g = part.greatest_below(roots[i]);
            if (g.kind == GreatestBelow::Sup && g.value == roots[i]) continue;
            bad = i;
            s = g.value;
            break;
        }
        if (!bad) return roots;
        if (last && !(s < *last)) throw ConditionError("NonTermination", "bad position did not decrease");
        last = s;
        Ordinal lo = *bad == 0 ? Ordinal() : roots[*bad - 1];
        std::vector<Ordinal> add_pts;
        Ordinal cur = lo;
        for (const auto& e : cnf_difference(lo, s)) {
            cur = add(cur, omega_power(e));
            add_pts.push_back(cur);
        }
        roots.insert(roots.begin() + static_cast<std::ptrdiff_t>(*bad), add_pts.begin(), add_pts.end());
    }
    throw ConditionError("NonTermination", "iteration cap reached");
}

// Is pi(p) in the filter generated by the identity sequence on I?
inline bool quotient_member(const Condition& p, const OrdinalSet& I, std::string* why = nullptr,
                            std::size_t cap = 4096) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    ICondition q = pi(p, I);
    auto v = validate_I(q);
    if (!v.empty()) return fail("projection invalid: " + v.front());
    auto idx = index_of(q.c, I);
    const Condition& c = q.c;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (*idx[i] != c.blocks[i].kappa) return fail("(a) block " + std::to_string(i + 1) + " misplaced");
    for (std::size_t i = 0; i < c.size(); ++i) {
        OrdinalSet gap = I.between(c.kappa_before(i), c.blocks[i].kappa);
        const Block& b = c.blocks[i];
        if (b.B ? !gap.subset_of(*b.B) : !gap.is_empty()) return fail("(b) gap below block " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Block& b = c.blocks[i];
        if (!b.B) continue;
        Ordinal lo = i == 0 ? Ordinal() : *idx[i - 1];
        Ordinal hi = i + 1 == c.size() ? c.u->lambda0 : *idx[i];
        // every chain lives in Y[<o(t)] when the gap is a single omega power;
        // then a set containing that whole stratum union always has one
        Ordinal ot = ord_of(b);
        auto span = cnf_difference(lo, hi);
        if (span.size() == 1 && span[0] == ot &&
            set_diff(set_inter(OrdinalSet::order_below(ot), OrdinalSet::interval(succ(lo), hi)), *b.B).is_empty())
            continue;
        std::size_t seen = 0;
        auto x = I.min_gt(lo);
        while (x && *x < hi) {
            if (++seen > cap) throw ConditionError("QuotientCheckTooLarge");
            if (in_succ(I, *x)) {
                Ordinal j = *predecessor_in(I, *x);
                auto exps = cnf_difference(j, *x);
                exps.pop_back();
                if (!exps.empty() && !chain_in(*b.B, exps, j, *x))
                    return fail("(c) no witness between " + j.str() + " and " + x->str());
            }
            // skip a run of consecutive members: their chains are empty
            std::optional<Ordinal> next;
            for (const auto& pc : I.pieces())
                if (pc.f.is_full() && pc.lo <= *x && pc.hi && *x < *pc.hi) {
                    next = I.min_ge(*pc.hi);
                    break;
                }
            x = next ? next : I.min_gt(*x);
        }
    }
    return true;
}

}  // namespace wb

#endif
