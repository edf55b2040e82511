#ifndef WORKBENCH_RAMSEY_HPP
#define WORKBENCH_RAMSEY_HPP

// Exhaustive finite analogues of homogenization and important coordinates
// for functions on increasing tuples of a product of finite integer sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

using Tuple = std::vector<int>;
using Factors = std::vector<std::vector<int>>;

struct FiniteProductFn {
    Factors factors;                    // each sorted, duplicate free
    std::map<Tuple, std::int64_t> table;

    std::int64_t operator()(const Tuple& t) const {
        auto it = table.find(t);
        if (it == table.end()) throw std::out_of_range("tuple outside the table");
        return it->second;
    }
};

// Increasing tuples of H_1 x ... x H_n.
inline std::vector<Tuple> increasing_tuples(const Factors& hs) {
    std::vector<Tuple> out;
    Tuple cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == hs.size()) {
            out.push_back(cur);
            return;
        }
        for (int x : hs[i]) {
            if (!cur.empty() && x <= cur.back()) continue;
            cur.push_back(x);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<std::string> check_table(const FiniteProductFn& f) {
    std::vector<std::string> v;
    for (const auto& a : f.factors)
        if (!std::is_sorted(a.begin(), a.end()) || std::adjacent_find(a.begin(), a.end()) != a.end())
            v.push_back("factor not sorted and duplicate free");
    for (const auto& t : increasing_tuples(f.factors))
        if (!f.table.count(t)) v.push_back("table misses a tuple");
    return v;
}

// Sub-products with |H_i| >= min_sizes[i] and a nonempty increasing product,
// largest total size first, then by the subset masks.
inline std::vector<Factors> candidate_subproducts(const Factors& a, const std::vector<std::size_t>& min_sizes) {
    if (min_sizes.size() != a.size()) throw std::invalid_argument("one minimum size per factor");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() > 20) throw std::invalid_argument("factor too large for exhaustive search");
        if (min_sizes[i] > a[i].size()) throw std::invalid_argument("minimum size exceeds factor size");
    }
    std::vector<std::vector<std::uint32_t>> masks(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t full = (1u << a[i].size()) - 1;
        for (std::uint32_t m = full;; --m) {
            if (static_cast<std::size_t>(__builtin_popcount(m)) >= std::max<std::size_t>(min_sizes[i], 1)) masks[i].push_back(m);
            if (m == 0) break;
        }
    }
    struct Cand {
        std::size_t total;
        std::vector<std::uint32_t> ms;
    };
    std::vector<Cand> cs;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::size_t i, std::size_t tot) -> void {
        if (i == a.size()) {
            cs.push_back(Cand{tot, cur});
            return;
        }
        for (auto m : masks[i]) {
            cur.push_back(m);
            self(self, i + 1, tot + static_cast<std::size_t>(__builtin_popcount(m)));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::stable_sort(cs.begin(), cs.end(), [](const Cand& x, const Cand& y) { return x.total > y.total; });
    std::vector<Factors> out;
    for (const auto& c : cs) {
        Factors h(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a[i].size(); ++j)
                if (c.ms[i] >> j & 1u) h[i].push_back(a[i][j]);
        if (increasing_tuples(h).empty()) continue;
        out.push_back(std::move(h));
    }
    return out;
}

struct Homogeneous {
    Factors h;
    std::int64_t color;
};

inline std::optional<Homogeneous> homogenize(const FiniteProductFn& f, const std::vector<std::size_t>& min_sizes) {
    for (auto& h : candidate_subproducts(f.factors, min_sizes)) {
        auto ts = increasing_tuples(h);
        std::int64_t c = f(ts.front());
        if (std::all_of(ts.begin(), ts.end(), [&](const Tuple& t) { return f(t) == c; })) return Homogeneous{h, c};
    }
    return std::nullopt;
}

inline Tuple restrict_to(const Tuple& t, const std::vector<std::size_t>& coords) {
    Tuple r;
    for (auto k : coords) r.push_back(t[k]);
    return r;
}

// F(x) = F(y) iff x|I = y|I on the increasing tuples of h: the value and the
// restriction must determine each other.
inline bool important_holds(const FiniteProductFn& f, const Factors& h, const std::vector<std::size_t>& coords) {
    std::map<Tuple, std::int64_t> by_key;
    std::map<std::int64_t, Tuple> by_val;
    for (const auto& t : increasing_tuples(h)) {
        Tuple k = restrict_to(t, coords);
        std::int64_t v = f(t);
        auto [a, ia] = by_key.emplace(k, v);
        if (!ia && a->second != v) return false;
        auto [b, ib] = by_val.emplace(v, k);
        if (!ib && b->second != k) return false;
    }
    return true;
}

// Subsets of {0..n-1} by size, then lexicographically.
inline std::vector<std::vector<std::size_t>> coordinate_sets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<bool> sel(n, false);
        std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (sel[i]) s.push_back(i);
            out.push_back(s);
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    return out;
}

struct Important {
    Factors h;
    std::vector<std::size_t> coords;  // 0-based
};

inline std::optional<Important> important_coordinates(const FiniteProductFn& f, const std::vector<std::size_t>& min_sizes) {
    auto cands = candidate_subproducts(f.factors, min_sizes);
    for (const auto& coords : coordinate_sets(f.factors.size()))
        for (const auto& h : cands)
            if (important_holds(f, h, coords)) return Important{h, coords};
    return std::nullopt;
}

}  // namespace wb

#endif
