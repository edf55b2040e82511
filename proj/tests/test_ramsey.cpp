#include <gtest/gtest.h>

#include <random>

#include "workbench/ramsey.hpp"

using namespace wb;

namespace {
FiniteProductFn make(Factors fs, const std::function<std::int64_t(const Tuple&)>& g) {
    FiniteProductFn f{std::move(fs), {}};
    for (const auto& t : increasing_tuples(f.factors)) f.table[t] = g(t);
    return f;
}
}  // namespace

TEST(Ramsey, IncreasingTuples) {
    auto ts = increasing_tuples({{1, 2, 3}, {2, 3}});
    EXPECT_EQ(ts, (std::vector<Tuple>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(Ramsey, ConstantFunctionIsHomogeneousOnFullFactors) {
    auto f = make({{1, 2, 3}, {4, 5, 6}}, [](const Tuple&) { return 7; });
    auto h = homogenize(f, {1, 1});
    ASSERT_TRUE(h);
    EXPECT_EQ(h->color, 7);
    EXPECT_EQ(h->h, f.factors);
    auto i = important_coordinates(f, {1, 1});
    ASSERT_TRUE(i);
    EXPECT_TRUE(i->coords.empty());
}

TEST(Ramsey, ParityOfFirstCoordinate) {
    auto f = make({{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}}, [](const Tuple& t) { return t[0] % 2; });
    auto h = homogenize(f, {3, 3});
    ASSERT_TRUE(h);
    EXPECT_EQ(h->h[0].size(), 3u);
    for (int x : h->h[0]) EXPECT_EQ(x % 2, h->color);
    EXPECT_EQ(h->h[1].size(), 6u);  // largest first: H_2 stays full
}

TEST(Ramsey, InjectiveGridHasNoHomogeneousSquare) {
    auto f = make({{1, 2, 3}, {4, 5, 6}}, [](const Tuple& t) { return t[0] * 10 + t[1]; });
    EXPECT_FALSE(homogenize(f, {2, 2}));
}

TEST(Ramsey, FirstCoordinateIsImportant) {
    auto f = make({{1, 2, 3}, {4, 5, 6}}, [](const Tuple& t) { return t[0]; });
    auto i = important_coordinates(f, {3, 3});
    ASSERT_TRUE(i);
    EXPECT_EQ(i->coords, (std::vector<std::size_t>{0}));
    EXPECT_EQ(i->h, f.factors);
}

TEST(Ramsey, SmallMinimaPreferAHomogeneousCorner) {
    // with room to shrink, a constant sub-product beats any coordinate
    auto f = make({{1, 2, 3}, {4, 5, 6}}, [](const Tuple& t) { return t[0]; });
    auto i = important_coordinates(f, {1, 1});
    ASSERT_TRUE(i);
    EXPECT_TRUE(i->coords.empty());
    EXPECT_EQ(i->h[0].size(), 1u);
}

TEST(Ramsey, MinSizeAboveFactorIsRejected) {
    auto f = make({{1, 2}}, [](const Tuple&) { return 0; });
    EXPECT_THROW(homogenize(f, {3}), std::invalid_argument);
}

TEST(Ramsey, ImportantHoldsOracle) {
    auto f = make({{1, 2, 3}, {4, 5, 6}}, [](const Tuple& t) { return t[1]; });
    EXPECT_TRUE(important_holds(f, f.factors, {1}));
    EXPECT_FALSE(important_holds(f, f.factors, {0}));
    EXPECT_FALSE(important_holds(f, f.factors, {0, 1}));  // same value, different restrictions
}
