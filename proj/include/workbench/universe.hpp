#ifndef WORKBENCH_UNIVERSE_HPP
#define WORKBENCH_UNIVERSE_HPP

// Toy coherent sequence of measures.  A set B is U(beta, xi)-large when the
// core of (beta, xi) minus B is bounded below beta.  Cores default to the
// stratum {x < beta : o(x) = xi}; finitely many may be overridden.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "workbench/ordinal_set.hpp"

namespace wb {

class ClosureDidNotStabilize : public std::runtime_error {
public:
    ClosureDidNotStabilize() : std::runtime_error("star closure did not stabilise within the iteration cap") {}
};

struct ToyUniverse {
    Ordinal lambda0;
    Ordinal delta0_bound;
    std::map<std::pair<Ordinal, Ordinal>, OrdinalSet> cores;  // (beta, xi) -> core

    static Ordinal o(const Ordinal& x) { return limit_order(x); }

    OrdinalSet stratum(const Ordinal& xi, const Ordinal& below) const {
        return set_inter(OrdinalSet::with_order(xi), OrdinalSet::interval(Ordinal(), below));
    }
    OrdinalSet core(const Ordinal& beta, const Ordinal& xi) const {
        auto it = cores.find({beta, xi});
        return it == cores.end() ? stratum(xi, beta) : it->second;
    }
    bool has_override(const Ordinal& beta, const Ordinal& xi) const { return cores.count({beta, xi}) != 0; }
    std::vector<Ordinal> overrides_at(const Ordinal& beta) const {
        std::vector<Ordinal> out;
        for (auto it = cores.lower_bound({beta, Ordinal()}); it != cores.end() && it->first.first == beta; ++it)
            out.push_back(it->first.second);
        return out;
    }

    std::vector<std::string> check() const;
};

inline std::vector<std::string> ToyUniverse::check() const {
    std::vector<std::string> v;
    if (!lambda0.is_limit()) v.push_back("lambda0 must be a nonzero limit");
    if (!(lambda0.lead_exponent() < delta0_bound)) v.push_back("lead exponent of lambda0 must be below delta0_bound");
    for (const auto& [key, c] : cores) {
        const auto& [beta, xi] = key;
        std::string at = " at (" + beta.str() + ", " + xi.str() + ")";
        if (beta > lambda0) v.push_back("core beyond lambda0" + at);
        if (!(xi < o(beta))) v.push_back("core index not below o(beta)" + at);
        if (!c.subset_of(stratum(xi, beta))) v.push_back("core is not inside the stratum" + at);
        if (!c.cofinal_below(beta)) v.push_back("core is bounded below beta" + at);
    }
    return v;
}

inline bool is_large(const ToyUniverse& u, const OrdinalSet& b, const Ordinal& beta, const Ordinal& xi) {
    if (!(xi < ToyUniverse::o(beta))) return false;
    return !set_diff(u.core(beta, xi), b).cofinal_below(beta);
}

// B large for every xi < o(beta).  Orders without an override are decided by
// the piece of B just below beta, which must admit all of them.
inline bool is_large_all(const ToyUniverse& u, const OrdinalSet& b, const Ordinal& beta) {
    Ordinal e = ToyUniverse::o(beta);
    if (e.is_zero()) return true;
    OrdinalSet need = OrdinalSet::interval(Ordinal(), e);
    for (const auto& xi : u.overrides_at(beta)) {
        if (!(xi < e)) continue;
        if (!is_large(u, b, beta, xi)) return false;
        need = set_diff(need, OrdinalSet::singleton(xi));
    }
    if (need.is_empty()) return true;
    for (const auto& p : b.pieces())
        if (p.lo < beta && (!p.hi || beta <= *p.hi)) return need.subset_of(p.f.order_set());
    return false;
}

// Points of B that survive one closure step: order 0, or B below them is large.
inline OrdinalSet star_step(const ToyUniverse& u, const OrdinalSet& b) {
    std::vector<Piece> interior;
    std::vector<Ordinal> special;
    for (const auto& p : b.pieces()) {
        Filter f = p.f;
        OrdinalSet os = f.order_set();
        auto gap = set_diff(OrdinalSet::all(), os).min();
        std::shared_ptr<const OrdinalSet> l;
        if (!gap)
            l = f.lim;
        else
            l = std::make_shared<const OrdinalSet>(OrdinalSet::interval(Ordinal(1), *gap));
        Filter g = canonical_filter(f.mod, f.res, l);
        interior.push_back(Piece{succ(p.lo), p.hi, g});
        special.push_back(p.lo);
    }
    OrdinalSet out = OrdinalSet::from_sorted_disjoint(std::move(interior));
    for (const auto& [key, c] : u.cores) special.push_back(key.first);
    std::sort(special.begin(), special.end());
    special.erase(std::unique(special.begin(), special.end()), special.end());
    for (const auto& x : special) {
        if (!b.contains(x)) continue;
        bool keep = ToyUniverse::o(x).is_zero() || is_large_all(u, b.below(x), x);
        bool has = out.contains(x);
        if (keep && !has) out = set_union(out, OrdinalSet::singleton(x));
        if (!keep && has) out = set_diff(out, OrdinalSet::singleton(x));
    }
    return out;
}

inline OrdinalSet star_closure(const ToyUniverse& u, const OrdinalSet& b, const Ordinal& beta, int cap = 64) {
    OrdinalSet cur = b.below(beta);
    for (int i = 0; i < cap; ++i) {
        OrdinalSet nxt = star_step(u, cur);
        if (nxt == cur) return nxt;
        cur = std::move(nxt);
    }
    throw ClosureDidNotStabilize();
}

// The dense-form representative: closure below kappa cut to orders below o(kappa).
inline OrdinalSet stratified(const ToyUniverse& u, const OrdinalSet& b, const Ordinal& kappa) {
    return set_inter(star_closure(u, b, kappa), OrdinalSet::order_below(ToyUniverse::o(kappa)));
}

// Per-order pieces B(beta, xi) for xi < o(beta); needs o(beta) finite.
inline std::map<Ordinal, OrdinalSet> stratify(const ToyUniverse& u, const OrdinalSet& b, const Ordinal& beta) {
    Ordinal e = ToyUniverse::o(beta);
    if (!e.is_finite()) throw Undefined("stratify needs a finite limit order");
    OrdinalSet star = star_closure(u, b, beta);
    std::map<Ordinal, OrdinalSet> out;
    for (std::uint64_t xi = 0; xi < e.to_finite(); ++xi) out[Ordinal(xi)] = set_inter(star, u.stratum(Ordinal(xi), beta));
    return out;
}

// Canonical measure-one set for kappa above a floor: cores below o(kappa), closed.
inline OrdinalSet canonical_set(const ToyUniverse& u, const Ordinal& kappa, const Ordinal& floor) {
    Ordinal e = ToyUniverse::o(kappa);
    OrdinalSet s = set_inter(OrdinalSet::order_below(e), OrdinalSet::interval(succ(floor), kappa));
    for (const auto& xi : u.overrides_at(kappa)) {
        if (!(xi < e)) continue;
        s = set_union(set_diff(s, OrdinalSet::with_order(xi)), u.core(kappa, xi).above(floor));
    }
    return stratified(u, s, kappa);
}

}  // namespace wb

#endif
