#pragma once
// Shared fixtures for the unit tests and the acceptance run.

#include <functional>
#include <memory>
#include <vector>

#include "workbench/generic.hpp"
#include "workbench/projection.hpp"
#include "workbench/random.hpp"

namespace wbt {

using namespace wb;

inline Ordinal P(const char* s) { return parse_ordinal(s); }
inline OrdinalSet S(const char* s) { return parse_set(s); }

inline std::shared_ptr<const ToyUniverse> universe(const char* lambda0, const char* delta0) {
    auto u = std::make_shared<ToyUniverse>();
    u->lambda0 = P(lambda0);
    u->delta0_bound = P(delta0);
    return u;
}

// Blocks at the given points with canonical sets above the previous block.
inline Condition canonical(std::shared_ptr<const ToyUniverse> u, std::vector<const char*> ks) {
    Condition p{u, {}, Ordinal()};
    Ordinal prev;
    for (auto k : ks) {
        Ordinal x = P(k);
        Block b{x, std::nullopt};
        if (!limit_order(x).is_zero()) b.B = canonical_set(*u, x, prev);
        p.blocks.push_back(b);
        prev = x;
    }
    return p;
}

inline std::vector<Ordinal> kappas(const Condition& p) {
    std::vector<Ordinal> out;
    for (const auto& b : p.blocks) out.push_back(b.kappa);
    return out;
}

inline std::vector<Ordinal> ords(std::initializer_list<const char*> xs) {
    std::vector<Ordinal> out;
    for (auto x : xs) out.push_back(P(x));
    return out;
}

// worked examples shared by the unit tests and the acceptance run
struct ExtensionTypeExample {
    std::shared_ptr<const ToyUniverse> u = universe("w^3", "4");
    Condition p = canonical(u, {"w", "w+1", "w^2", "w^2+w", "w^3"});
    Assignment a{{P("1"), P("2")},
                 {},
                 {P("w*2"), P("w*2+1"), P("w*3")},
                 {P("w^2+1")},
                 {P("w^2+w+1"), P("w^2+w*2"), P("w^2*2")}};
    TypeVec expected{ords({"0", "0"}), {}, ords({"1", "0", "1"}), ords({"0"}), ords({"0", "1", "2"})};
};

struct UnveilExample {
    std::shared_ptr<const ToyUniverse> u = universe("w^(w+1)+w^2*2+w", "w+2");
    Condition p = canonical(u, {"w^w", "w^w+1", "w^(w+1)", "w^(w+1)+w", "w^(w+1)+w^2", "w^(w+1)+w^2*2",
                                "w^(w+1)+w^2*2+w"});
    Ordinal gamma = P("w^w+w^5*3+5");
    TypeVec expected{{}, {}, ords({"5", "5", "5", "0", "0", "0", "0", "0"}), {}, {}, {}, {}};
};

}  // namespace wbt

namespace wbt {

// Every type of total length <= max_len over p (entry in gap i below o(t_i)).
inline std::vector<TypeVec> all_types(const Condition& p, std::size_t max_len) {
    std::vector<TypeVec> out;
    TypeVec cur(p.size());
    // entries are appended in gap order so each type is produced once
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t gap, std::size_t left) {
        out.push_back(cur);
        if (left == 0) return;
        for (std::size_t g = gap; g < p.size(); ++g) {
            Ordinal o = ord_of(p.blocks[g]);
            if (!o.is_finite()) continue;
            for (std::uint64_t xi = 0; xi < o.to_finite(); ++xi) {
                cur[g].push_back(Ordinal(xi));
                go(g, left - 1);
                cur[g].pop_back();
            }
        }
    };
    go(0, max_len);
    return out;
}

// All (X, alpha) with |X| <= max_len and p^alpha <=* q, alpha drawn from the
// points of q, by brute force.
inline std::vector<std::pair<TypeVec, Assignment>> realisations(const Condition& p, const Condition& q,
                                                                 std::size_t max_len) {
    std::vector<std::pair<TypeVec, Assignment>> hits;
    auto pool = kappas(q);
    for (const auto& x : all_types(p, max_len)) {
        Assignment a(p.size());
        std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t gap, std::size_t k) {
            if (gap == p.size()) {
                try {
                    Condition r = extend(p, a);
                    if (leq_star(r, q)) hits.emplace_back(x, a);
                } catch (const ConditionError&) {
                }
                return;
            }
            if (k == x[gap].size()) {
                pick(gap + 1, 0);
                return;
            }
            Ordinal lo = a[gap].empty() ? p.kappa_before(gap) : a[gap].back();
            for (const auto& c : pool) {
                if (!(c > lo) || !(c < p.blocks[gap].kappa) || limit_order(c) != x[gap][k]) continue;
                a[gap].push_back(c);
                pick(gap, k + 1);
                a[gap].pop_back();
            }
        };
        pick(0, 0);
    }
    return hits;
}

}  // namespace wbt

namespace wbt {

inline bool same_condition(const Condition& a, const Condition& b) {
    if (a.size() != b.size() || a.floor != b.floor) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Block &x = a.blocks[i], &y = b.blocks[i];
        if (x.kappa != y.kappa || x.B.has_value() != y.B.has_value()) return false;
        if (x.B && *x.B != *y.B) return false;
    }
    return true;
}

inline bool same_icondition(const ICondition& a, const ICondition& b) { return a.I == b.I && same_condition(a.c, b.c); }

inline std::string show(const Condition& p) {
    std::string s;
    for (const auto& b : p.blocks) s += b.kappa.str() + (b.B ? "[" + b.B->str() + "]" : "") + " ; ";
    return s;
}

}  // namespace wbt
