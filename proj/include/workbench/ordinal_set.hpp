#ifndef WORKBENCH_ORDINAL_SET_HPP
#define WORKBENCH_ORDINAL_SET_HPP

// Sets of ordinals as finite unions of half-open intervals [a, b), where b may
// be unbounded.  Each interval carries a Filter that selects its members by
// limit order: points of order 0 by the residue of their finite part, limit
// points by membership of o(x) in a nested set.  This is closed under the
// boolean operations, which plain interval lists are not (strata are needed).

#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "workbench/ordinal.hpp"

namespace wb {

class OrdinalSet;

struct Filter {
    std::uint32_t mod = 1;
    std::vector<char> res{1};               // res[r]: order-0 points with finite part = r (mod) allowed
    std::shared_ptr<const OrdinalSet> lim;  // allowed orders of limit points; null means all

    static Filter full() { return Filter{}; }
    static Filter none();

    bool contains(const Ordinal& x) const;
    bool res_any() const;
    bool res_all() const;
    bool is_full() const;
    bool lim_all() const { return !lim; }
    bool lim_contains(const Ordinal& xi) const;  // xi >= 1
    std::optional<Ordinal> lim_min() const;
    bool lim_meets_below(const Ordinal& e) const;  // lim intersects [1, e)
    bool is_trivially_empty() const;
    bool cofinal_below(const Ordinal& alpha) const;  // alpha a nonzero limit
    OrdinalSet order_set() const;                     // {0 if res_all} u lim
};

bool operator==(const Filter& a, const Filter& b);
inline bool operator!=(const Filter& a, const Filter& b) { return !(a == b); }

struct Piece {
    Ordinal lo;
    std::optional<Ordinal> hi;  // nullopt: unbounded
    Filter f;
};

struct GreatestBelow {
    enum Kind { None, Max, Sup } kind = None;
    Ordinal value;  // Max: the element; Sup: the supremum, not attained
};

class OrdinalSet {
public:
    OrdinalSet() = default;

    static OrdinalSet empty() { return OrdinalSet(); }
    static OrdinalSet all() { return from_piece(Piece{Ordinal(), std::nullopt, Filter::full()}); }
    static OrdinalSet interval(const Ordinal& a, const std::optional<Ordinal>& b) {
        if (b && *b <= a) return OrdinalSet();
        return from_piece(Piece{a, b, Filter::full()});
    }
    static OrdinalSet singleton(const Ordinal& a) { return interval(a, succ(a)); }
    static OrdinalSet from_piece(Piece p) {
        OrdinalSet s;
        s.pieces_.push_back(std::move(p));
        s.normalize();
        return s;
    }
    static OrdinalSet from_pieces(std::vector<Piece> ps);
    static OrdinalSet from_sorted_disjoint(std::vector<Piece> ps) {
        OrdinalSet s;
        s.pieces_ = std::move(ps);
        s.normalize();
        return s;
    }
    // {x : o(x) in orders}
    static OrdinalSet with_order_in(const OrdinalSet& orders);
    static OrdinalSet with_order(const Ordinal& xi) { return with_order_in(singleton(xi)); }
    // {x : o(x) < e}
    static OrdinalSet order_below(const Ordinal& e) { return with_order_in(interval(Ordinal(), e)); }
    // order-0 points whose finite part is r mod m
    static OrdinalSet residue(std::uint64_t r, std::uint64_t m);

    const std::vector<Piece>& pieces() const { return pieces_; }

    bool is_empty() const;
    bool contains(const Ordinal& x) const;
    std::optional<Ordinal> min() const { return min_ge(Ordinal()); }
    std::optional<Ordinal> min_ge(const Ordinal& x) const;
    std::optional<Ordinal> min_gt(const Ordinal& x) const { return min_ge(succ(x)); }
    bool cofinal_below(const Ordinal& alpha) const;
    bool bounded() const;
    GreatestBelow greatest_below(const std::optional<Ordinal>& c) const;
    bool subset_of(const OrdinalSet& o) const;
    bool is_plain() const;

    OrdinalSet below(const Ordinal& b) const;  // elements < b
    OrdinalSet above(const Ordinal& a) const;  // elements > a
    OrdinalSet between(const Ordinal& a, const Ordinal& b) const { return above(a).below(b); }  // open

    Ordinal order_type() const;  // plain pieces only
    std::vector<Ordinal> enumerate(std::size_t cap) const;

    std::string str() const;

    bool structurally_equal(const OrdinalSet& o) const;

    void normalize();

private:
    std::vector<Piece> pieces_;
};

enum class SetOp { Union, Inter, Diff, SymDiff };

OrdinalSet combine(const OrdinalSet& a, const OrdinalSet& b, SetOp op);
inline OrdinalSet set_union(const OrdinalSet& a, const OrdinalSet& b) { return combine(a, b, SetOp::Union); }
inline OrdinalSet set_inter(const OrdinalSet& a, const OrdinalSet& b) { return combine(a, b, SetOp::Inter); }
inline OrdinalSet set_diff(const OrdinalSet& a, const OrdinalSet& b) { return combine(a, b, SetOp::Diff); }

// Semantic equality.
inline bool operator==(const OrdinalSet& a, const OrdinalSet& b) { return combine(a, b, SetOp::SymDiff).is_empty(); }
inline bool operator!=(const OrdinalSet& a, const OrdinalSet& b) { return !(a == b); }

// ---- Filter ----

inline Filter Filter::none() {
    Filter f;
    f.res = {0};
    f.lim = std::make_shared<const OrdinalSet>();
    return f;
}

inline bool Filter::res_any() const {
    for (char c : res)
        if (c) return true;
    return false;
}
inline bool Filter::res_all() const {
    for (char c : res)
        if (!c) return false;
    return true;
}
inline bool Filter::is_full() const { return res_all() && lim_all(); }
inline bool Filter::lim_contains(const Ordinal& xi) const { return !lim || lim->contains(xi); }
inline std::optional<Ordinal> Filter::lim_min() const { return lim ? lim->min_ge(Ordinal(1)) : Ordinal(1); }
inline bool Filter::lim_meets_below(const Ordinal& e) const {
    if (e <= Ordinal(1)) return false;
    if (!lim) return true;
    auto m = lim->min_ge(Ordinal(1));
    return m && *m < e;
}
inline bool Filter::is_trivially_empty() const { return !res_any() && lim && lim->is_empty(); }

inline bool Filter::contains(const Ordinal& x) const {
    if (!x.is_limit()) return res[x.finite_part() % mod] != 0;
    return lim_contains(limit_order(x));
}

inline bool Filter::cofinal_below(const Ordinal& alpha) const {
    return res_any() || lim_meets_below(limit_order(alpha));
}

inline bool operator==(const Filter& a, const Filter& b) {
    if (a.mod != b.mod || a.res != b.res) return false;
    if (!a.lim || !b.lim) return !a.lim && !b.lim;
    return a.lim->structurally_equal(*b.lim);
}

inline std::uint32_t minimal_period(const std::vector<char>& r) {
    std::uint32_t m = static_cast<std::uint32_t>(r.size());
    for (std::uint32_t d = 1; d < m; ++d) {
        if (m % d) continue;
        bool ok = true;
        for (std::uint32_t i = 0; i < m && ok; ++i) ok = r[i] == r[i % d];
        if (ok) return d;
    }
    return m;
}

inline Filter canonical_filter(std::uint32_t mod, std::vector<char> res, std::shared_ptr<const OrdinalSet> lim) {
    std::uint32_t d = minimal_period(res);
    res.resize(d);
    Filter f;
    f.mod = d;
    f.res = std::move(res);
    if (lim && lim->pieces().empty()) {
        f.lim = lim;
    } else if (lim) {
        OrdinalSet l = lim->above(Ordinal());  // orders >= 1
        if (l == OrdinalSet::interval(Ordinal(1), std::nullopt))
            f.lim = nullptr;
        else
            f.lim = std::make_shared<const OrdinalSet>(std::move(l));
    }
    (void)mod;
    return f;
}

inline OrdinalSet lim_as_set(const Filter& f) {
    return f.lim ? *f.lim : OrdinalSet::interval(Ordinal(1), std::nullopt);
}

inline bool apply_op(bool x, bool y, SetOp op) {
    switch (op) {
        case SetOp::Union: return x || y;
        case SetOp::Inter: return x && y;
        case SetOp::Diff: return x && !y;
        default: return x != y;
    }
}

inline Filter combine_filters(const Filter& a, const Filter& b, SetOp op) {
    std::uint32_t m = std::lcm(a.mod, b.mod);
    if (m > 4096) throw std::length_error("residue modulus too large");
    std::vector<char> r(m);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = apply_op(a.res[i % a.mod], b.res[i % b.mod], op);
    std::shared_ptr<const OrdinalSet> l;
    if (a.lim_all() && b.lim_all()) {
        if (op == SetOp::Diff || op == SetOp::SymDiff) l = std::make_shared<const OrdinalSet>();
    } else {
        l = std::make_shared<const OrdinalSet>(combine(lim_as_set(a), lim_as_set(b), op));
    }
    return canonical_filter(m, std::move(r), l);
}

inline OrdinalSet Filter::order_set() const {
    OrdinalSet s = lim_as_set(*this);
    if (res_all()) s = set_union(s, OrdinalSet::singleton(Ordinal()));
    return s;
}

// ---- piece-level queries ----

inline bool piece_has(const Piece& p, const Ordinal& x) {
    return x >= p.lo && (!p.hi || x < *p.hi) && p.f.contains(x);
}

// Least member of the piece that is >= x.
inline std::optional<Ordinal> piece_min_ge(const Piece& p, const Ordinal& x) {
    Ordinal s = x < p.lo ? p.lo : x;
    if (p.hi && s >= *p.hi) return std::nullopt;
    std::optional<Ordinal> best;
    const Filter& f = p.f;
    if (f.res_any()) {
        if (!s.is_limit()) {
            std::uint64_t fp = s.finite_part();
            for (std::uint64_t k = 0; k < f.mod; ++k)
                if (f.res[(fp + k) % f.mod]) {
                    best = add(s, Ordinal(k));
                    break;
                }
        } else {
            for (std::uint64_t k = 1; k <= f.mod; ++k)
                if (f.res[k % f.mod]) {
                    best = add(s, Ordinal(k));
                    break;
                }
        }
    }
    std::optional<Ordinal> lc;
    if (s.is_limit() && f.lim_contains(limit_order(s))) {
        lc = s;
    } else if (auto xi = f.lim_min()) {
        lc = least_with_order(s, *xi);
    }
    if (lc && (!best || *lc < *best)) best = lc;
    if (best && p.hi && *best >= *p.hi) return std::nullopt;
    return best;
}

// Greatest member of [lo, u) under filter f.
inline GreatestBelow filter_greatest_in(const Ordinal& lo, Ordinal u, const Filter& f) {
    GreatestBelow none;
    for (int guard = 0; guard < 100000; ++guard) {
        if (u <= lo) return none;
        if (u.is_successor()) {
            Ordinal lam = limit_part(u);
            std::uint64_t n = u.finite_part();
            if (f.res_any()) {
                std::uint64_t steps = 0;
                for (std::uint64_t k = n - 1; k >= 1 && steps < f.mod; --k, ++steps) {
                    Ordinal v = add(lam, Ordinal(k));
                    if (v < lo) return none;
                    if (f.res[k % f.mod]) return GreatestBelow{GreatestBelow::Max, v};
                }
            }
            if (lam < lo) return none;
            if (f.contains(lam)) return GreatestBelow{GreatestBelow::Max, lam};
            u = lam;
            continue;
        }
        // u is a nonzero limit above lo
        if (f.cofinal_below(u)) return GreatestBelow{GreatestBelow::Sup, u};
        const Term& last = u.terms().back();
        if (last.coef >= 2 && f.lim_contains(last.exp)) {
            Ordinal v = drop_last_unit(u);
            if (v < lo) return none;
            return GreatestBelow{GreatestBelow::Max, v};
        }
        Ordinal r = drop_last_term(u);
        if (r < lo) return none;
        if (f.contains(r)) return GreatestBelow{GreatestBelow::Max, r};
        u = r;
    }
    throw std::logic_error("greatest_in did not terminate");
}

// ---- OrdinalSet ----

inline OrdinalSet OrdinalSet::from_pieces(std::vector<Piece> ps) {
    OrdinalSet acc;
    for (auto& p : ps) acc = set_union(acc, from_piece(std::move(p)));
    return acc;
}

inline OrdinalSet OrdinalSet::with_order_in(const OrdinalSet& orders) {
    Filter f;
    f.res = {static_cast<char>(orders.contains(Ordinal()) ? 1 : 0)};
    f.lim = std::make_shared<const OrdinalSet>(orders);
    f = canonical_filter(1, f.res, f.lim);
    return from_piece(Piece{Ordinal(), std::nullopt, f});
}

inline OrdinalSet OrdinalSet::residue(std::uint64_t r, std::uint64_t m) {
    if (m == 0 || m > 4096) throw std::invalid_argument("modulus must be in 1..4096");
    std::vector<char> res(m, 0);
    res[r % m] = 1;
    Filter f = canonical_filter(static_cast<std::uint32_t>(m), res, std::make_shared<const OrdinalSet>());
    return from_piece(Piece{Ordinal(), std::nullopt, f});
}

inline bool OrdinalSet::is_empty() const {
    for (const auto& p : pieces_)
        if (piece_min_ge(p, p.lo)) return false;
    return true;
}

inline bool OrdinalSet::contains(const Ordinal& x) const {
    for (const auto& p : pieces_)
        if (piece_has(p, x)) return true;
    return false;
}

inline std::optional<Ordinal> OrdinalSet::min_ge(const Ordinal& x) const {
    for (const auto& p : pieces_) {
        if (p.hi && *p.hi <= x) continue;
        if (auto m = piece_min_ge(p, x)) return m;
    }
    return std::nullopt;
}

inline bool OrdinalSet::cofinal_below(const Ordinal& alpha) const {
    if (!alpha.is_limit()) return false;
    for (const auto& p : pieces_)
        if (p.lo < alpha && (!p.hi || alpha <= *p.hi)) return p.f.cofinal_below(alpha);
    return false;
}

inline bool OrdinalSet::bounded() const {
    if (pieces_.empty() || pieces_.back().hi) return true;
    return !piece_min_ge(pieces_.back(), pieces_.back().lo);
}

inline GreatestBelow OrdinalSet::greatest_below(const std::optional<Ordinal>& c) const {
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
        if (c && it->lo >= *c) continue;
        std::optional<Ordinal> u = it->hi;
        if (c && (!u || *c < *u)) u = c;
        if (!u) {
            if (piece_min_ge(*it, it->lo)) throw Undefined("set is unbounded");
            continue;
        }
        GreatestBelow g = filter_greatest_in(it->lo, *u, it->f);
        if (g.kind != GreatestBelow::None) return g;
    }
    return GreatestBelow{};
}

inline bool OrdinalSet::subset_of(const OrdinalSet& o) const { return set_diff(*this, o).is_empty(); }

inline bool OrdinalSet::is_plain() const {
    for (const auto& p : pieces_)
        if (!p.f.is_full()) return false;
    return true;
}

inline OrdinalSet OrdinalSet::below(const Ordinal& b) const { return set_inter(*this, interval(Ordinal(), b)); }
inline OrdinalSet OrdinalSet::above(const Ordinal& a) const {
    return set_inter(*this, interval(succ(a), std::nullopt));
}

inline Ordinal OrdinalSet::order_type() const {
    Ordinal acc;
    for (const auto& p : pieces_) {
        if (!p.f.is_full()) throw Undefined("order type of a patterned piece is not supported");
        if (!p.hi) throw Undefined("order type of an unbounded set");
        acc = add(acc, left_sub(p.lo, *p.hi));
    }
    return acc;
}

inline std::vector<Ordinal> OrdinalSet::enumerate(std::size_t cap) const {
    std::vector<Ordinal> out;
    auto x = min();
    while (x && out.size() < cap) {
        out.push_back(*x);
        x = min_gt(*x);
    }
    return out;
}

inline bool OrdinalSet::structurally_equal(const OrdinalSet& o) const {
    if (pieces_.size() != o.pieces_.size()) return false;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& a = pieces_[i];
        const Piece& b = o.pieces_[i];
        if (a.lo != b.lo || a.hi.has_value() != b.hi.has_value()) return false;
        if (a.hi && *a.hi != *b.hi) return false;
        if (a.f != b.f) return false;
    }
    return true;
}

inline void OrdinalSet::normalize() {
    std::vector<Piece> out;
    for (auto& p : pieces_) {
        if (p.hi && *p.hi <= p.lo) continue;
        auto first = piece_min_ge(p, p.lo);
        if (!first) continue;
        // tighten the left end to the first member
        if (*first != p.lo) p.lo = *first;
        if (p.hi && *p.hi == succ(p.lo)) p.f = Filter::full();
        if (!out.empty() && out.back().hi && *out.back().hi == p.lo && out.back().f == p.f) {
            out.back().hi = p.hi;
            continue;
        }
        // neighbours whose filters differ only where the left piece has no points
        if (!out.empty() && out.back().hi && *out.back().hi == p.lo) {
            Piece& l = out.back();
            Filter d = combine_filters(l.f, p.f, SetOp::SymDiff);
            if (!piece_min_ge(Piece{l.lo, l.hi, d}, l.lo)) {
                l.hi = p.hi;
                l.f = p.f;
                continue;
            }
        }
        // absorb a singleton just before a filtered piece that admits it
        if (!out.empty() && out.back().hi && *out.back().hi == succ(out.back().lo) && p.f.contains(out.back().lo) &&
            !piece_min_ge(Piece{out.back().lo, p.lo, p.f}, *out.back().hi)) {
            out.back().hi = p.hi;
            out.back().f = p.f;
            continue;
        }
        out.push_back(std::move(p));
    }
    pieces_ = std::move(out);
}

inline OrdinalSet combine(const OrdinalSet& a, const OrdinalSet& b, SetOp op) {
    // short cuts; they also stop the recursion through nested order sets
    bool ea = a.pieces().empty(), eb = b.pieces().empty();
    if (ea || eb) {
        switch (op) {
            case SetOp::Union:
            case SetOp::SymDiff: return ea ? b : a;
            case SetOp::Inter: return OrdinalSet();
            default: return ea ? OrdinalSet() : a;
        }
    }
    if (a.structurally_equal(b)) return (op == SetOp::Union || op == SetOp::Inter) ? a : OrdinalSet();
    std::vector<Ordinal> cuts;
    for (const auto* s : {&a, &b})
        for (const auto& p : s->pieces()) {
            cuts.push_back(p.lo);
            if (p.hi) cuts.push_back(*p.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto filter_at = [](const OrdinalSet& s, const Ordinal& x) -> Filter {
        for (const auto& p : s.pieces())
            if (p.lo <= x && (!p.hi || x < *p.hi)) return p.f;
        return Filter::none();
    };
    std::vector<Piece> ps;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        Filter fa = filter_at(a, cuts[i]);
        Filter fb = filter_at(b, cuts[i]);
        Filter f = combine_filters(fa, fb, op);
        if (f.is_trivially_empty()) continue;
        std::optional<Ordinal> hi;
        if (i + 1 < cuts.size()) hi = cuts[i + 1];
        ps.push_back(Piece{cuts[i], hi, f});
    }
    return OrdinalSet::from_sorted_disjoint(std::move(ps));
}

// ---- printing ----

inline std::string filter_str(const Filter& f) {
    std::vector<std::string> parts;
    if (f.res_all()) {
        parts.push_back("Y(0)");
    } else {
        for (std::uint32_t r = 0; r < f.mod; ++r)
            if (f.res[r]) parts.push_back("M(" + std::to_string(r) + "," + std::to_string(f.mod) + ")");
    }
    if (!f.lim) {
        parts.push_back("Y([1,inf))");
    } else if (!f.lim->is_empty()) {
        auto m = f.lim->min();
        bool single = f.lim->pieces().size() == 1 && f.lim->pieces()[0].hi && *f.lim->pieces()[0].hi == succ(*m);
        parts.push_back("Y(" + (single ? m->str() : f.lim->str()) + ")");
    }
    if (parts.empty()) return "{}";
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " u " : "") + parts[i];
    return s + ")";
}

inline std::string piece_str(const Piece& p) {
    std::string base;
    if (p.hi && *p.hi == succ(p.lo) && p.f.contains(p.lo)) return "{" + p.lo.str() + "}";
    base = "[" + p.lo.str() + "," + (p.hi ? p.hi->str() : std::string("inf")) + ")";
    if (p.f.is_full()) return base;
    return base + " n " + filter_str(p.f);
}

inline std::string OrdinalSet::str() const {
    if (pieces_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        std::string ps = piece_str(pieces_[i]);
        // operators share one precedence, so a filtered piece needs its own parentheses
        if (pieces_.size() > 1 && !pieces_[i].f.is_full() && ps.front() != '{') ps = "(" + ps + ")";
        s += (i ? " u " : "") + ps;
    }
    return s;
}

// ---- parsing ----
//   expr   := unary (("u" | "n" | "\") unary)*      left associative, equal precedence
//   unary  := "{" [ordinal ("," ordinal)*] "}" | "[" ordinal "," (ordinal | "inf") ")"
//           | "Y(" expr ")" | "M(" nat "," nat ")" | "(" expr ")" | "all" | ordinal

OrdinalSet parse_set_expr(Cursor& c);

inline OrdinalSet parse_set_unary(Cursor& c) {
    char ch = c.peek();
    if (ch == '{') {
        c.accept('{');
        OrdinalSet s;
        if (c.accept('}')) return s;
        do {
            s = set_union(s, OrdinalSet::singleton(parse_ordinal_at(c)));
        } while (c.accept(','));
        c.expect('}');
        return s;
    }
    if (ch == '[') {
        c.accept('[');
        Ordinal a = parse_ordinal_at(c);
        c.expect(',');
        std::optional<Ordinal> b;
        if (!c.accept_word("inf")) b = parse_ordinal_at(c);
        c.expect(')');
        return OrdinalSet::interval(a, b);
    }
    if (ch == '(') {
        c.accept('(');
        OrdinalSet s = parse_set_expr(c);
        c.expect(')');
        return s;
    }
    if (c.accept_word("Y(")) {
        OrdinalSet s = parse_set_expr(c);
        c.expect(')');
        return OrdinalSet::with_order_in(s);
    }
    if (c.accept_word("M(")) {
        std::uint64_t r = c.nat();
        c.expect(',');
        std::uint64_t m = c.nat();
        if (m == 0 || m > 4096) c.fail("modulus must be in 1..4096");
        c.expect(')');
        return OrdinalSet::residue(r, m);
    }
    if (c.accept_word("all")) return OrdinalSet::all();
    if (ch == 'w' || (ch >= '0' && ch <= '9')) return OrdinalSet::singleton(parse_ordinal_at(c));
    c.fail("expected a set");
}

inline OrdinalSet parse_set_expr(Cursor& c) {
    OrdinalSet acc = parse_set_unary(c);
    for (;;) {
        char ch = c.peek();
        if (ch == 'u') {
            c.accept('u');
            acc = set_union(acc, parse_set_unary(c));
        } else if (ch == 'n') {
            c.accept('n');
            acc = set_inter(acc, parse_set_unary(c));
        } else if (ch == '\\') {
            c.accept('\\');
            acc = set_diff(acc, parse_set_unary(c));
        } else {
            return acc;
        }
    }
}

inline OrdinalSet parse_set(std::string_view s) {
    Cursor c(s);
    OrdinalSet r = parse_set_expr(c);
    if (!c.at_end()) c.fail("unexpected trailing input");
    return r;
}

// ---- index-set notions ----

// alpha in Lim(S): alpha in S, alpha a nonzero limit, S cofinal below alpha.
inline bool in_lim(const OrdinalSet& s, const Ordinal& alpha) {
    return s.contains(alpha) && alpha.is_limit() && s.cofinal_below(alpha);
}
inline bool in_succ(const OrdinalSet& s, const Ordinal& alpha) { return s.contains(alpha) && !in_lim(s, alpha); }

// Predecessor of alpha in S: max(S n alpha).  The empty case answers 0, the
// virtual bottom point.  nullopt when the supremum is not attained.
inline std::optional<Ordinal> predecessor_in(const OrdinalSet& s, const Ordinal& alpha) {
    GreatestBelow g = s.greatest_below(alpha);
    if (g.kind == GreatestBelow::Max) return g.value;
    if (g.kind == GreatestBelow::None) return Ordinal();
    return std::nullopt;
}

}  // namespace wb

#endif
