#ifndef WORKBENCH_GENERIC_HPP
#define WORKBENCH_GENERIC_HPP

// The simulated generic: the identity sequence on the canonical universe,
// optionally restricted to an index set.

#include "workbench/magidor.hpp"

namespace wb {

struct CanonicalSequence {
    Ordinal lambda0;
    std::optional<OrdinalSet> restriction;

    OrdinalSet members() const {
        OrdinalSet all = OrdinalSet::interval(Ordinal(), lambda0);
        return restriction ? set_inter(*restriction, all) : all;
    }
};

// kappa(p) inside C, and C between consecutive blocks inside that block's set.
inline bool in_filter(const Condition& p, const CanonicalSequence& c, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (p.u->lambda0 != c.lambda0) return fail("different lambda0");
    OrdinalSet cs = c.members();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Block& b = p.blocks[i];
        if (i + 1 < p.size() && !cs.contains(b.kappa)) return fail(b.kappa.str() + " is not on the sequence");
        OrdinalSet gap = cs.between(p.kappa_before(i), b.kappa);
        if (b.B ? !gap.subset_of(*b.B) : !gap.is_empty())
            return fail("sequence points below " + b.kappa.str() + " escape its set");
    }
    return true;
}

// Order type of C n (a, b).  Patterned index sets are counted when finite.
inline Ordinal interval_otp(const CanonicalSequence& c, const Ordinal& a, const Ordinal& b, std::size_t cap = 100000) {
    if (!(a < b) || b > c.lambda0) throw Undefined("interval_otp needs a < b <= lambda0");
    OrdinalSet part = c.members().between(a, b);
    if (part.is_plain()) return part.order_type();
    auto xs = part.enumerate(cap + 1);
    if (xs.size() > cap) throw Undefined("order type of an infinite patterned set");
    return Ordinal(xs.size());
}

// Half-open variant: otp of C n [a, b).
inline Ordinal interval_otp_closed_left(const CanonicalSequence& c, const Ordinal& a, const Ordinal& b) {
    Ordinal open = interval_otp(c, a, b);
    return c.members().contains(a) ? add(Ordinal(1), open) : open;
}

struct Compatibility {
    bool ok = false;
    std::optional<Condition> witness;
    std::string message;
};

// Common extension with kappa(p) u kappa(q) and blockwise intersected sets.
inline Compatibility filter_pair_compatible(const Condition& p, const Condition& q, const CanonicalSequence& c) {
    if (!same_universe(p, q)) throw ConditionError("UniverseMismatch");
    if (!in_filter(p, c) || !in_filter(q, c)) return Compatibility{false, std::nullopt, "inputs not both in the filter"};
    std::vector<Ordinal> ks;
    for (const auto* x : {&p, &q})
        for (const auto& b : x->blocks) ks.push_back(b.kappa);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    auto covering = [](const Condition& x, const Ordinal& k) -> const Block& {
        for (const auto& b : x.blocks)
            if (k <= b.kappa) return b;
        return x.top();
    };
    const ToyUniverse& u = *p.u;
    Condition r{p.u, {}, p.floor};
    Ordinal prev = p.floor;
    for (const auto& k : ks) {
        Block nb{k, std::nullopt};
        if (!limit_order(k).is_zero()) {
            const Block& bp = covering(p, k);
            const Block& bq = covering(q, k);
            if (!bp.B || !bq.B) return Compatibility{false, std::nullopt, "point of positive order under a bare block"};
            nb.B = stratified(u, set_inter(bp.B->between(prev, k), bq.B->between(prev, k)), k);
        }
        r.blocks.push_back(std::move(nb));
        prev = k;
    }
    Compatibility out;
    auto v = validate(r);
    if (!v.empty()) out.message = "common extension invalid: " + v.front();
    else if (!leq(p, r) || !leq(q, r)) out.message = "common extension does not extend both";
    else if (!in_filter(r, c)) out.message = "common extension left the filter";
    else out.ok = true;
    out.witness = std::move(r);
    return out;
}

}  // namespace wb

#endif
