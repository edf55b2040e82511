#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace wbt;

TEST(OrdinalParse, CanonicalPrinting) {
    EXPECT_EQ(P("w*2+3").str(), "w*2 + 3");
    EXPECT_EQ(P("w^(w+1) + w^2*2 + w").str(), "w^(w + 1) + w^2*2 + w");
    EXPECT_EQ(P("0").str(), "0");
    EXPECT_EQ(P("1 + w").str(), "w");  // absorption while parsing sums
}

TEST(OrdinalParse, ErrorsCarryPosition) {
    try {
        parse_ordinal("w + ");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_GE(e.column(), 4u);
    }
    EXPECT_THROW(parse_ordinal("w^"), ParseError);
    EXPECT_THROW(parse_ordinal("3x"), ParseError);
}

TEST(OrdinalArith, AdditionAbsorbs) {
    EXPECT_EQ(add(P("1"), P("w")), P("w"));
    EXPECT_EQ(add(P("w"), P("1")), P("w+1"));
    EXPECT_EQ(add(P("w^2+w*3+4"), P("w^2*2+5")), P("w^2*3+5"));
    EXPECT_EQ(add(P("w^w+w^5"), P("w^3")), P("w^w+w^5+w^3"));
    EXPECT_EQ(add(P("w^3"), P("w^w")), P("w^w"));
}

TEST(OrdinalArith, Compare) {
    EXPECT_LT(P("w*3"), P("w^2"));
    EXPECT_LT(P("w^w"), P("w^(w+1)"));
    EXPECT_GT(P("w+1"), P("w"));
    EXPECT_EQ(compare(P("w^2*2"), P("w^2+w^2")), 0);
}

TEST(OrdinalArith, CnfDifference) {
    // a + w^d1 + ... + w^dk = b
    EXPECT_EQ(cnf_difference(P("w+1"), P("w^2")), ords({"2"}));
    EXPECT_EQ(cnf_difference(P("w"), P("w*3+2")), ords({"1", "1", "0", "0"}));
    EXPECT_EQ(cnf_difference(P("w^2"), P("w^2")), std::vector<Ordinal>{});
    EXPECT_THROW(cnf_difference(P("w+1"), P("w")), DifferenceUndefined);
}

TEST(OrdinalArith, LimitOrderAndClassify) {
    EXPECT_EQ(limit_order(P("w^3+w")), P("1"));
    EXPECT_EQ(limit_order(P("w^w")), P("w"));
    EXPECT_EQ(limit_order(P("w+5")), P("0"));
    EXPECT_EQ(classify(P("0")), Kind::Zero);
    EXPECT_EQ(classify(P("w+5")), Kind::Successor);
    EXPECT_EQ(classify(P("w^2")), Kind::Limit);
    EXPECT_EQ(least_with_order(P("w+3"), P("1")), P("w*2"));
    EXPECT_EQ(least_with_order(P("w^2"), P("2")), P("w^2"));
}

TEST(OrdinalArith, EnumerationIsSortedWithinWeight) {
    auto es = enumerate_below_omega_omega(2000);
    ASSERT_EQ(es.size(), 2000u);
    EXPECT_EQ(es[0], P("0"));
    EXPECT_EQ(es[1], P("1"));
}

TEST(OrdinalProperty, RandomTriples) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 3000; ++k) {
        Ordinal a = random_ordinal(rng, 1), b = random_ordinal(rng, 1), c = random_ordinal(rng, 1);
        ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
        ASSERT_EQ(add(a, Ordinal()), a);
        ASSERT_EQ(add(Ordinal(), a), a);
        if (b < c) ASSERT_LT(add(a, b), add(a, c));
        Ordinal lo = std::min(a, b), hi = std::max(a, b);
        ASSERT_EQ(add(lo, left_sub(lo, hi)), hi);
    }
}
