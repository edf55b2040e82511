#ifndef WORKBENCH_ORDINAL_HPP
#define WORKBENCH_ORDINAL_HPP

// Ordinals below epsilon_0 in Cantor normal form.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wb {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column), bare_(msg) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& bare() const { return bare_; }

private:
    std::size_t line_, column_;
    std::string bare_;
};

class DifferenceUndefined : public std::domain_error {
public:
    DifferenceUndefined() : std::domain_error("difference undefined: left operand exceeds right") {}
};

class Undefined : public std::domain_error {
public:
    explicit Undefined(const std::string& what) : std::domain_error(what) {}
};

struct Term;

class Ordinal {
public:
    Ordinal() = default;
    Ordinal(std::uint64_t n);  // NOLINT: implicit from naturals is convenient

    static Ordinal omega();
    static Ordinal from_terms(std::vector<Term> terms);  // caller guarantees CNF

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_finite() const;
    bool is_successor() const;
    bool is_limit() const;  // nonzero limit
    std::uint64_t finite_part() const;
    std::uint64_t to_finite() const;  // throws unless finite
    Ordinal lead_exponent() const;    // 0 for zero
    Ordinal last_exponent() const;    // 0 for zero

    std::string str() const;

private:
    std::vector<Term> t_;
};

struct Term {
    Ordinal exp;
    std::uint64_t coef = 0;
};

int compare(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != 0; }
inline bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) < 0; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return compare(a, b) > 0; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return compare(a, b) >= 0; }

// ---- implementation ----

inline Ordinal::Ordinal(std::uint64_t n) {
    if (n) t_.push_back(Term{Ordinal(), n});
}

inline Ordinal Ordinal::omega() {
    Ordinal o;
    o.t_.push_back(Term{Ordinal(1), 1});
    return o;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    Ordinal o;
    o.t_ = std::move(terms);
    return o;
}

inline bool Ordinal::is_finite() const { return t_.empty() || (t_.size() == 1 && t_[0].exp.is_zero()); }
inline bool Ordinal::is_successor() const { return !t_.empty() && t_.back().exp.is_zero(); }
inline bool Ordinal::is_limit() const { return !t_.empty() && !t_.back().exp.is_zero(); }
inline std::uint64_t Ordinal::finite_part() const { return is_successor() ? t_.back().coef : 0; }
inline std::uint64_t Ordinal::to_finite() const {
    if (!is_finite()) throw Undefined("ordinal is not finite: " + str());
    return t_.empty() ? 0 : t_[0].coef;
}
inline Ordinal Ordinal::lead_exponent() const { return t_.empty() ? Ordinal() : t_.front().exp; }
inline Ordinal Ordinal::last_exponent() const { return t_.empty() ? Ordinal() : t_.back().exp; }

inline int compare(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare(x[i].exp, y[i].exp);
        if (c) return c;
        if (x[i].coef != y[i].coef) return x[i].coef < y[i].coef ? -1 : 1;
    }
    if (x.size() == y.size()) return 0;
    return x.size() < y.size() ? -1 : 1;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("coefficient overflow");
    return a + b;
}

inline Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& lead = b.terms().front().exp;
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        int c = compare(t.exp, lead);
        if (c > 0) {
            out.push_back(t);
        } else {
            if (c == 0) {
                out.push_back(Term{lead, checked_add(t.coef, b.terms().front().coef)});
                out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
                return Ordinal::from_terms(std::move(out));
            }
            break;
        }
    }
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

inline Ordinal omega_power(const Ordinal& e, std::uint64_t coef = 1) {
    if (coef == 0) return Ordinal();
    return Ordinal::from_terms({Term{e, coef}});
}

// o(x): exponent of the last CNF term; o(0) is 0 by convention.
inline Ordinal limit_order(const Ordinal& x) { return x.last_exponent(); }

// Terms with exponent >= e.
inline Ordinal trunc_ge(const Ordinal& x, const Ordinal& e) {
    std::vector<Term> out;
    for (const auto& t : x.terms()) {
        if (t.exp < e) break;
        out.push_back(t);
    }
    return Ordinal::from_terms(std::move(out));
}

// x with its finite part removed.
inline Ordinal limit_part(const Ordinal& x) {
    if (!x.is_successor()) return x;
    std::vector<Term> out(x.terms().begin(), x.terms().end() - 1);
    return Ordinal::from_terms(std::move(out));
}

// x minus one copy of its last term, i.e. the unique y with y + w^o(x) = x.
inline Ordinal drop_last_unit(const Ordinal& x) {
    if (x.is_zero()) throw Undefined("zero has no last term");
    std::vector<Term> out = x.terms();
    if (--out.back().coef == 0) out.pop_back();
    return Ordinal::from_terms(std::move(out));
}

// x minus its whole last term.
inline Ordinal drop_last_term(const Ordinal& x) {
    if (x.is_zero()) throw Undefined("zero has no last term");
    std::vector<Term> out(x.terms().begin(), x.terms().end() - 1);
    return Ordinal::from_terms(std::move(out));
}

// Unique d with a + d = b (left subtraction).
inline Ordinal left_sub(const Ordinal& a, const Ordinal& b) {
    int c = compare(a, b);
    if (c > 0) throw DifferenceUndefined();
    if (c == 0) return Ordinal();
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::size_t k = 0;
    while (k < x.size() && k < y.size() && compare(x[k].exp, y[k].exp) == 0 && x[k].coef == y[k].coef) ++k;
    std::vector<Term> out;
    if (k == x.size()) {
        out.assign(y.begin() + k, y.end());
    } else if (compare(y[k].exp, x[k].exp) > 0) {
        out.assign(y.begin() + k, y.end());
    } else {
        out.push_back(Term{y[k].exp, y[k].coef - x[k].coef});
        out.insert(out.end(), y.begin() + k + 1, y.end());
    }
    return Ordinal::from_terms(std::move(out));
}

// Exponent sequence <d_1 >= ... >= d_k> with a + w^d_1 + ... + w^d_k = b.
inline std::vector<Ordinal> cnf_difference(const Ordinal& a, const Ordinal& b) {
    Ordinal d = left_sub(a, b);
    std::vector<Ordinal> out;
    for (const auto& t : d.terms())
        for (std::uint64_t i = 0; i < t.coef; ++i) out.push_back(t.exp);
    return out;
}

enum class Kind { Zero, Successor, Limit };

inline Kind classify(const Ordinal& x) {
    if (x.is_zero()) return Kind::Zero;
    return x.is_successor() ? Kind::Successor : Kind::Limit;
}

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Zero: return "zero";
        case Kind::Successor: return "successor";
        default: return "limit";
    }
}

inline Ordinal succ(const Ordinal& x) { return add(x, Ordinal(1)); }

// Least y >= x, y > 0, with o(y) = xi (xi >= 1).
inline Ordinal least_with_order(const Ordinal& x, const Ordinal& xi) {
    if (!x.is_zero() && limit_order(x) == xi) return x;
    return add(trunc_ge(x, xi), omega_power(xi));
}

// ---- printing ----

inline std::string exponent_atom(const Ordinal& e) {
    if (e.is_finite()) return std::to_string(e.to_finite());
    if (e == Ordinal::omega()) return "w";
    return "(" + e.str() + ")";
}

inline std::string Ordinal::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (i) s += " + ";
        const Term& t = t_[i];
        if (t.exp.is_zero()) {
            s += std::to_string(t.coef);
            continue;
        }
        if (t.exp == Ordinal(1))
            s += "w";
        else
            s += "w^" + exponent_atom(t.exp);
        if (t.coef > 1) s += "*" + std::to_string(t.coef);
    }
    return s;
}

inline std::string to_string(const Ordinal& x) { return x.str(); }

// ---- parsing ----
//   ordinal := "0" | term ("+" term)*
//   term    := "w" ("^" atom)? ("*" nat)? | nat
//   atom    := nat | "w" | "(" ordinal ")"
// Non-canonical sums are normalised by ordinal addition, so "1 + w" is w.

class Cursor {
public:
    explicit Cursor(std::string_view s, std::size_t pos = 0) : s_(s), pos_(pos) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    std::uint64_t nat() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') fail("expected a natural number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }
    std::string_view text() const { return s_; }

private:
    std::string_view s_;
    std::size_t pos_;
};

Ordinal parse_ordinal_at(Cursor& c);

inline Ordinal parse_exponent_atom(Cursor& c) {
    char ch = c.peek();
    if (ch == '(') {
        c.accept('(');
        Ordinal e = parse_ordinal_at(c);
        c.expect(')');
        return e;
    }
    if (ch == 'w') {
        c.accept('w');
        return Ordinal::omega();
    }
    if (ch >= '0' && ch <= '9') return Ordinal(c.nat());
    c.fail("expected an exponent");
}

inline Ordinal parse_term(Cursor& c) {
    char ch = c.peek();
    if (ch == 'w') {
        c.accept('w');
        Ordinal e(1);
        if (c.accept('^')) e = parse_exponent_atom(c);
        std::uint64_t k = 1;
        if (c.accept('*')) {
            k = c.nat();
            if (k == 0) c.fail("coefficient must be positive");
        }
        return omega_power(e, k);
    }
    if (ch >= '0' && ch <= '9') {
        std::uint64_t n = c.nat();
        if (n == 0) c.fail("zero is only allowed as the whole ordinal");
        return Ordinal(n);
    }
    c.fail("expected an ordinal term");
}

inline Ordinal parse_ordinal_at(Cursor& c) {
    if (c.peek() == '0') {
        std::size_t save = c.pos();
        c.skip_ws();
        c.set_pos(c.pos() + 1);
        char nxt = c.peek();
        if (!(nxt >= '0' && nxt <= '9')) return Ordinal();
        c.set_pos(save);
    }
    Ordinal acc = parse_term(c);
    while (c.accept('+')) acc = add(acc, parse_term(c));
    return acc;
}

inline Ordinal parse_ordinal(std::string_view s) {
    Cursor c(s);
    Ordinal o = parse_ordinal_at(c);
    if (!c.at_end()) c.fail("unexpected trailing input");
    return o;
}

// ---- enumeration helpers used by tests ----

// First `count` ordinals below w^w with exponents and coefficients at most 4,
// ordered by weight sum((e+1)*c) and then by value.
inline std::vector<Ordinal> enumerate_below_omega_omega(std::size_t count) {
    std::vector<std::pair<std::uint64_t, Ordinal>> all;
    std::uint64_t cs[5];
    for (cs[0] = 0; cs[0] <= 4; ++cs[0])
        for (cs[1] = 0; cs[1] <= 4; ++cs[1])
            for (cs[2] = 0; cs[2] <= 4; ++cs[2])
                for (cs[3] = 0; cs[3] <= 4; ++cs[3])
                    for (cs[4] = 0; cs[4] <= 4; ++cs[4]) {
                        std::vector<Term> ts;
                        std::uint64_t w = 0;
                        for (int e = 4; e >= 0; --e)
                            if (cs[e]) {
                                ts.push_back(Term{Ordinal(static_cast<std::uint64_t>(e)), cs[e]});
                                w += (static_cast<std::uint64_t>(e) + 1) * cs[e];
                            }
                        all.emplace_back(w, Ordinal::from_terms(std::move(ts)));
                    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    std::vector<Ordinal> out;
    for (std::size_t i = 0; i < all.size() && i < count; ++i) out.push_back(all[i].second);
    return out;
}

// Random ordinal with nested exponents up to the given depth.
template <class Rng>
Ordinal random_ordinal(Rng& rng, int depth, int max_terms = 3, std::uint64_t max_coef = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint64_t> coef(1, max_coef);
    int n = nterms(rng);
    std::vector<Ordinal> exps;
    for (int i = 0; i < n; ++i) {
        if (depth <= 0) {
            exps.push_back(Ordinal(std::uniform_int_distribution<std::uint64_t>(0, 4)(rng)));
        } else {
            exps.push_back(random_ordinal(rng, depth - 1, 2, 3));
        }
    }
    std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Term> ts;
    for (auto& e : exps) ts.push_back(Term{e, coef(rng)});
    return Ordinal::from_terms(std::move(ts));
}

// Random ordinal strictly below `bound` (bound > 0); biased towards interesting values.
template <class Rng>
Ordinal random_below(Rng& rng, const Ordinal& bound) {
    if (bound.is_zero()) throw Undefined("nothing below zero");
    const auto& bt = bound.terms();
    std::uniform_int_distribution<std::size_t> pick(0, bt.size() - 1);
    std::size_t k = pick(rng);
    std::vector<Term> ts(bt.begin(), bt.begin() + static_cast<std::ptrdiff_t>(k));
    const Term& t = bt[k];
    std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(0, t.coef - 1)(rng);
    if (c) ts.push_back(Term{t.exp, c});
    Ordinal head = Ordinal::from_terms(std::move(ts));
    if (t.exp.is_zero()) return head;
    // tail below w^exp
    Ordinal e = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? Ordinal() : random_below(rng, t.exp);
    Ordinal tail = omega_power(e, std::uniform_int_distribution<std::uint64_t>(1, 3)(rng));
    if (std::uniform_int_distribution<int>(0, 1)(rng) && !e.is_zero())
        tail = add(tail, Ordinal(std::uniform_int_distribution<std::uint64_t>(0, 3)(rng)));
    if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) tail = Ordinal();
    return add(head, tail);
}

}  // namespace wb

#endif
