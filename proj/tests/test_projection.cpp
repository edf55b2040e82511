#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace wbt;

namespace {
struct Omega2 {
    std::shared_ptr<const ToyUniverse> u = universe("w^2", "3");
};
}  // namespace

TEST(Projection, FirstIndexExample) {
    Omega2 f;
    Condition p = canonical(f.u, {"w", "w^2"});
    OrdinalSet I = S("{0} u [w,w^2)");
    auto idx = index_of(p, I);
    ASSERT_TRUE(idx[0].has_value());
    EXPECT_EQ(*idx[0], P("w"));
    ICondition q = pi(p, I);
    ASSERT_EQ(q.c.size(), 2u);
    EXPECT_FALSE(q.c.blocks[0].B.has_value());  // projected to a bare w
    EXPECT_EQ(q.c.blocks[1].kappa, P("w^2"));
    EXPECT_TRUE(validate_I(q).empty());
    Condition o = onto_construct(q);
    EXPECT_TRUE(in_D(o, I).ok);
    EXPECT_TRUE(same_icondition(pi(o, I), q));
}

TEST(Projection, DensifyLiteralIndexSet) {
    Omega2 f;
    Condition p = canonical(f.u, {"w", "w+1", "w*2", "w^2"});
    OrdinalSet I = S("[0,w) n M(0,2) u {w} u {w+2,w+3} u ([w,w^2) n Y(1))");
    DReport r = in_D(p, I);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.block, 3u);
    EXPECT_EQ(r.clause, 2);
    DensifyTrace tr;
    Condition d = densify(p, I, &tr);
    EXPECT_EQ(kappas(d), ords({"w", "w+1", "w+2", "w+3", "w*2", "w^2"}));
    EXPECT_TRUE(leq(p, d));
    EXPECT_TRUE(in_D(d, I).ok);
    EXPECT_TRUE(correct_computation_check(d, I));
    EXPECT_TRUE(quotient_member(d, I));
    for (std::size_t k = 1; k < tr.failing_positions.size(); ++k)
        EXPECT_LT(tr.failing_positions[k], tr.failing_positions[k - 1]);
}

TEST(Projection, DensifyRepairedIndexSet) {
    Omega2 f;
    Condition p = canonical(f.u, {"w", "w*2", "w*3", "w^2"});
    OrdinalSet I = S("[0,w) n M(0,2) u {w, w+2, w+3} u ([w*2+1,w*3) n Y(0)) u ([w*3,w^2) n Y(1))");
    DReport r = in_D(p, I);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.block, 3u);
    EXPECT_EQ(r.clause, 1);
    Condition d = densify(p, I);
    EXPECT_EQ(kappas(d), ords({"w", "w+1", "w+2", "w+3", "w*2", "w*2+1", "w*3", "w^2"}));
    EXPECT_TRUE(in_D(d, I).ok);
    EXPECT_TRUE(same_condition(densify(d, I), d));
}

TEST(Projection, LiftOntoOwnProjectionIsIdentityOnKappas) {
    Omega2 f;
    Condition p = canonical(f.u, {"w", "w+1", "w*2", "w^2"});
    OrdinalSet I = S("[0,w) n M(0,2) u {w} u {w+2,w+3} u ([w,w^2) n Y(1))");
    Condition d = densify(p, I);
    Condition l = lift(d, pi(d, I));
    EXPECT_EQ(kappas(l), kappas(d));
}

TEST(Projection, ClubRefinement) {
    auto out = refine_to_clubs(ords({"w^3", "w^3+w^2", "w^3+w^2*2", "w^3+w^2*2+w"}),
                               S("[0,w^3+1) u {w^3+w+2, w^3+w+3} u [w^3+w^2*2+1, w^3+w^2*2+w)"));
    EXPECT_EQ(out, ords({"w^3", "w^3+w", "w^3+w+1", "w^3+w+2", "w^3+w+3", "w^3+w^2", "w^3+w^2*2",
                         "w^3+w^2*2+w"}));
}

TEST(Projection, IndexSetMismatchIsAnError) {
    Omega2 f;
    Condition p = canonical(f.u, {"w", "w^2"});
    ICondition a = pi(p, S("[0,w^2)"));
    ICondition b = pi(p, S("{0} u [w,w^2)"));
    EXPECT_THROW(leq_I(a, b), ConditionError);
}

TEST(Projection, RandomLemmaInstances) {
    std::mt19937_64 rng(17);
    auto u = canonical_universe(P("w^3"));
    int checked = 0;
    for (int k = 0; k < 60; ++k) {
        OrdinalSet I = random_index_set(u->lambda0, rng);
        try {
            Condition p = densify(random_condition(u, rng, 3), I);
            Condition p2 = densify(random_extension(p, rng), I);
            ASSERT_TRUE(leq(p, p2));
            ICondition a = pi(p, I), b = pi(p2, I);
            ASSERT_TRUE(validate_I(a).empty()) << show(p) << " I=" << I.str();
            EXPECT_TRUE(leq_I(a, b)) << show(p) << " -> " << show(p2) << " I=" << I.str();
            EXPECT_TRUE(correct_computation_check(p, I));
            EXPECT_TRUE(same_icondition(pi(onto_construct(a), I), a));
            Condition l = lift(p, b);
            EXPECT_TRUE(leq(p, l));
            EXPECT_TRUE(same_icondition(pi(l, I), b)) << show(l);
            ++checked;
        } catch (const ConditionError& e) {
            ASSERT_TRUE(e.code() == "RepairImpossible" || e.code() == "WitnessUnavailable") << e.what();
        }
    }
    EXPECT_GT(checked, 30);
}
