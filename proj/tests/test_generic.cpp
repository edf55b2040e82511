#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace wbt;

TEST(Generic, TopOnlyWithFullSetIsInTheFilter) {
    auto u = universe("w^2", "3");
    Condition p{u, {Block{P("w^2"), S("[0,w^2)")}}, Ordinal()};
    CanonicalSequence c{P("w^2"), std::nullopt};
    EXPECT_TRUE(in_filter(p, c));
}

TEST(Generic, MissingLimitPointLeavesTheFilter) {
    auto u = universe("w^2", "3");
    Condition p = canonical(u, {"w^2"});
    p.blocks[0].B = set_diff(*p.blocks[0].B, S("{w*3}"));
    CanonicalSequence c{P("w^2"), std::nullopt};
    std::string why;
    EXPECT_FALSE(in_filter(p, c, &why));
    EXPECT_FALSE(why.empty());
}

TEST(Generic, IntervalOrderTypes) {
    CanonicalSequence c{P("w^3"), std::nullopt};
    EXPECT_EQ(interval_otp(c, P("w"), P("w*2")), P("w"));
    EXPECT_EQ(interval_otp(c, P("w^2"), P("w^2*2")), P("w^2"));
    EXPECT_EQ(interval_otp(c, P("w+1"), P("w^2")), P("w^2"));
    EXPECT_EQ(interval_otp(c, P("3"), P("4")), P("0"));
    EXPECT_EQ(interval_otp_closed_left(c, P("3"), P("4")), P("1"));
    CanonicalSequence ci{P("w^2"), S("{0} u [w,w^2)")};
    EXPECT_EQ(interval_otp(ci, P("0"), P("w")), P("0"));
    CanonicalSequence ev{P("w^2"), S("[0,w) n M(0,2) u [w,w^2)")};
    EXPECT_EQ(interval_otp(ev, P("0"), P("7")), P("3"));
    EXPECT_THROW(interval_otp(ev, P("0"), P("w")), Undefined);
    EXPECT_THROW(interval_otp(c, P("w"), P("w")), Undefined);
}

TEST(Generic, CompatibleCommonExtension) {
    auto u = canonical_universe(P("w^2"));
    CanonicalSequence c{P("w^2"), std::nullopt};
    Condition r = root_condition(u);
    Assignment a(1), b(1);
    a[0] = {P("w"), P("w*2")};  // w*2 alone would leave w outside every set
    b[0] = {P("1"), P("2"), P("w")};
    Condition p = extend(r, a), q = extend(r, b);
    ASSERT_TRUE(in_filter(p, c));
    ASSERT_TRUE(in_filter(q, c));
    Compatibility k = filter_pair_compatible(p, q, c);
    ASSERT_TRUE(k.ok) << k.message;
    EXPECT_EQ(kappas(*k.witness), ords({"1", "2", "w", "w*2", "w^2"}));
    Assignment lone(1);
    lone[0] = {P("w*2")};
    EXPECT_FALSE(in_filter(extend(r, lone), c));
    EXPECT_TRUE(filter_pair_compatible(p, p, c).ok);
}

TEST(Generic, RandomConditionsLandInTheFilterWithCoherentCoordinates) {
    std::mt19937_64 rng(23);
    for (const char* l : {"w^2", "w^3", "w^3*2+w"}) {
        auto u = canonical_universe(P(l));
        CanonicalSequence c{u->lambda0, std::nullopt};
        for (int k = 0; k < 30; ++k) {
            Condition p = random_condition(u, rng, 4, true);
            ASSERT_TRUE(in_filter(p, c)) << show(p);
            for (std::size_t i = 1; i <= p.size(); ++i) {
                EXPECT_EQ(gamma_of(p, i), p.blocks[i - 1].kappa);
                Ordinal want = omega_power(ord_of(p.blocks[i - 1]));
                EXPECT_EQ(interval_otp_closed_left(c, p.kappa_before(i - 1), p.blocks[i - 1].kappa), want);
            }
        }
    }
}
