#ifndef WORKBENCH_RANDOM_HPP
#define WORKBENCH_RANDOM_HPP

// Random conditions and index sets for property checks and --self-test.

#include <random>

#include "workbench/projection.hpp"

namespace wb {

inline std::shared_ptr<const ToyUniverse> canonical_universe(const Ordinal& lambda0) {
    auto u = std::make_shared<ToyUniverse>();
    u->lambda0 = lambda0;
    u->delta0_bound = succ(lambda0.lead_exponent());
    return u;
}

// One random step extension: a short type below one block, witnesses taken a
// few steps above the least choice, and now and then a tail cut of some set.
// With `along` the least witnesses are used and nothing is cut, so a condition
// in the filter of the identity sequence stays there.
template <class Rng>
Condition random_extension(const Condition& p, Rng& rng, bool along = false) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.blocks[i].B && !p.blocks[i].B->is_empty()) open.push_back(i);
    if (open.empty()) return p;
    std::size_t i = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    const Block& t = p.blocks[i];
    Ordinal o = ord_of(t);
    int len = std::uniform_int_distribution<int>(1, 3)(rng);
    Assignment a(p.size());
    Ordinal prev = p.kappa_before(i);
    for (int k = 0; k < len; ++k) {
        Ordinal xi = random_below(rng, o);
        OrdinalSet s = set_inter(*t.B, OrdinalSet::with_order(xi));
        auto m = s.min_gt(prev);
        for (int skip = along ? 0 : std::uniform_int_distribution<int>(0, 2)(rng); m && skip > 0; --skip) {
            auto n = s.min_gt(*m);
            if (!n) break;
            m = n;
        }
        if (!m) break;
        a[i].push_back(*m);
        prev = *m;
    }
    if (a[i].empty()) return p;
    Condition q = extend(p, a);
    if (!along && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng);
        Block& b = q.blocks[j];
        if (b.B) {
            Ordinal lo = q.kappa_before(j);
            Ordinal cut = random_below(rng, b.kappa);
            if (cut > lo) {
                OrdinalSet nb = stratified(*q.u, b.B->above(cut), b.kappa);
                if (is_large_all(*q.u, nb, b.kappa)) b.B = nb;
            }
        }
    }
    return q;
}

template <class Rng>
Condition random_condition(std::shared_ptr<const ToyUniverse> u, Rng& rng, int max_steps = 4, bool along = false) {
    bool split = along || std::uniform_int_distribution<int>(0, 1)(rng);
    Condition p = split ? cnf_root_condition(u) : root_condition(u);
    int steps = std::uniform_int_distribution<int>(0, max_steps)(rng);
    for (int k = 0; k < steps; ++k) p = random_extension(p, rng, along);
    return p;
}

// Random closed index set below lambda0: a few closed pieces, plus an
// unbounded tail when `cofinal` is set.  Each filter keeps every limit point
// (orders at least xi, or even successors plus all limits), so the pieces
// stay closed.
template <class Rng>
OrdinalSet random_index_set(const Ordinal& lambda0, Rng& rng, bool cofinal = true) {
    OrdinalSet s = OrdinalSet::singleton(Ordinal());
    auto orders_from = [&](const Ordinal& bound) {
        return OrdinalSet::with_order_in(OrdinalSet::interval(random_below(rng, bound), std::nullopt));
    };
    int pieces = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int k = 0; k < pieces; ++k) {
        Ordinal a = random_below(rng, lambda0), b = random_below(rng, lambda0);
        if (b < a) std::swap(a, b);
        OrdinalSet base = OrdinalSet::interval(a, succ(b));
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
            case 0: base = set_inter(base, orders_from(succ(lambda0.lead_exponent()))); break;
            case 1:
                base = set_inter(base, set_union(OrdinalSet::residue(0, 2),
                                                 OrdinalSet::with_order_in(OrdinalSet::interval(Ordinal(1), std::nullopt))));
                break;
            default: break;
        }
        // the endpoints themselves stay in, so a piece is never empty
        s = set_union(s, set_union(base, set_union(OrdinalSet::singleton(a), OrdinalSet::singleton(b))));
    }
    if (cofinal) {
        OrdinalSet tail = OrdinalSet::interval(random_below(rng, lambda0), lambda0);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) tail = set_inter(tail, orders_from(limit_order(lambda0)));
        s = set_union(s, tail);
    }
    return s;
}

}  // namespace wb

#endif
