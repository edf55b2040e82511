#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace wbt;

TEST(Condition, RootIsValid) {
    auto u = universe("w^3", "4");
    Condition r = root_condition(u);
    EXPECT_TRUE(validate(r).empty());
    EXPECT_EQ(r.size(), 1u);
}

TEST(Condition, ValidateCatchesBrokenClauses) {
    auto u = universe("w^2", "3");
    Condition p = canonical(u, {"w", "w^2"});
    ASSERT_TRUE(validate(p).empty());
    Condition q = p;
    q.blocks[0].B = S("[1,w) n M(0,2)");  // not large
    EXPECT_FALSE(validate(q).empty());
    q = p;
    q.blocks[1].B = S("[1,w^2)");  // min not above w
    EXPECT_FALSE(validate(q).empty());
    q = p;
    q.blocks[0].kappa = P("w+1");  // order 0 with a set
    EXPECT_FALSE(validate(q).empty());
    q = p;
    q.blocks.pop_back();
    EXPECT_FALSE(validate(q).empty());
}

TEST(Condition, GammaIsPartialSumOfPowers) {
    UnveilExample s;
    EXPECT_EQ(gamma_of(s.p, 1), P("w^w"));
    EXPECT_EQ(gamma_of(s.p, 2), P("w^w+1"));
    EXPECT_EQ(gamma_of(s.p, 3), P("w^(w+1)"));
    EXPECT_EQ(gamma_of(s.p, 7), P("w^(w+1)+w^2*2+w"));
}

TEST(ExtensionType, ExtensionTypeExampleExample) {
    ExtensionTypeExample s;
    ASSERT_TRUE(validate(s.p).empty());
    EXPECT_EQ(type_of(s.p, s.a), s.expected);
    Condition q = extend(s.p, s.a);
    EXPECT_TRUE(validate(q).empty());
    EXPECT_TRUE(leq(s.p, q));
    FoundType f = find_type(s.p, q);
    EXPECT_EQ(f.type, s.expected);
    EXPECT_EQ(f.points, s.a);
    EXPECT_EQ(q.size(), s.p.size() + 9);
}

TEST(ExtensionType, RejectsPointsOutsideTheSet) {
    ExtensionTypeExample s;
    Assignment bad(s.p.size());
    bad[2] = {P("w")};  // not above w+1
    EXPECT_THROW(extend(s.p, bad), ConditionError);
}

TEST(Unveil, UnveilExampleExample) {
    UnveilExample s;
    ASSERT_TRUE(validate(s.p).empty());
    TypeVec x = unveil_type(s.p, s.gamma);
    EXPECT_EQ(x, s.expected);
    Condition q = extend_minimal(s.p, x);
    EXPECT_TRUE(validate(q).empty());
    // the new maximal point of gap 3 is the tenth block and sits at gamma
    EXPECT_EQ(gamma_of(q, 10), s.gamma);
    EXPECT_THROW(unveil_type(s.p, P("w^w")), ConditionError);
}

TEST(Order, DirectExtensionKeepsKappas) {
    auto u = universe("w^2", "3");
    Condition p = canonical(u, {"w", "w^2"});
    Condition q = p;
    q.blocks[1].B = stratified(*u, q.blocks[1].B->above(P("w*5")), P("w^2"));
    EXPECT_TRUE(leq_star(p, q));
    EXPECT_FALSE(leq(q, p));
    Assignment a(p.size());
    a[1] = {P("w*3")};
    Condition r = extend(p, a);
    EXPECT_TRUE(leq(p, r));
    EXPECT_FALSE(leq_star(p, r));
}

TEST(Split, JoinRestores) {
    UnveilExample s;
    SplitPair sp = split_at(s.p, 3);
    EXPECT_EQ(sp.lower.size(), 3u);
    EXPECT_EQ(sp.upper.floor, P("w^(w+1)"));
    Condition j = join(sp.lower, sp.upper);
    EXPECT_EQ(kappas(j), kappas(s.p));
    EXPECT_TRUE(validate(sp.lower).empty());
    EXPECT_TRUE(validate(sp.upper).empty());
    EXPECT_THROW(split_at(s.p, 2), ConditionError);  // w^w+1 has order 0
}

TEST(PartitionProperty, UniqueRealisationOnRandomExtensions) {
    std::mt19937_64 rng(3);
    auto u = canonical_universe(P("w^3"));
    for (int k = 0; k < 25; ++k) {
        Condition p = random_condition(u, rng, 2);
        Condition q = random_extension(p, rng);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) q = random_extension(q, rng);
        if (q.size() - p.size() > 4) continue;
        FoundType f = find_type(p, q);
        auto hits = realisations(p, q, 4);
        ASSERT_EQ(hits.size(), 1u);
        EXPECT_EQ(hits[0].first, f.type);
        EXPECT_EQ(hits[0].second, f.points);
    }
}
