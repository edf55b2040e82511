#include <gtest/gtest.h>

#include <random>

#include "prikry_support.hpp"

using namespace wbt;

namespace {
ToyUltraStructure small() {
    ToyUltraStructure u;
    u.ground = {1, 2, 3, 4, 5};
    u.fallback = Measure{{3, 4, 5}, {}};
    u.nodes[{}] = Measure{{2, 4}, {}};
    u.nodes[{2}] = Measure{{3, 5}, {{3, 1}}};
    return u;
}
}  // namespace

TEST(PrikryTree, DefaultTreeIsValid) {
    auto u = small();
    TreeCondition t;
    t.depth = 0;
    EXPECT_TRUE(validate_tree(t, u).empty());
    EXPECT_EQ(successors(t, u, {}), (IntSet{2, 4}));
    EXPECT_EQ(successors(t, u, {4}), (IntSet{5}));  // fallback core above 4
}

TEST(PrikryTree, SmallSetIsRejected) {
    auto u = small();
    TreeCondition t;
    t.depth = 1;
    t.explicit_sets[{}] = {4};
    EXPECT_FALSE(validate_tree(t, u).empty());
}

TEST(PrikryTree, OrderAndDirectOrder) {
    auto u = small();
    TreeCondition s;
    TreeCondition t;
    t.trunk = {2};
    EXPECT_TRUE(leq_tree(s, t, u));
    EXPECT_FALSE(leq_star_tree(s, t, u));
    TreeCondition w;
    w.trunk = {3};  // 3 is not a successor of the empty node
    EXPECT_FALSE(leq_tree(s, w, u));
    TreeCondition x;
    x.depth = 1;
    x.explicit_sets[{}] = {2, 4, 5};
    EXPECT_TRUE(leq_star_tree(x, s, u));
    EXPECT_FALSE(leq_tree(s, x, u));
}

TEST(PrikryTree, NormalizationPrunesNonChainSuccessors) {
    auto u = small();
    u.nodes[{2}] = Measure{{5}, {{3, 1}}};  // 3 projects below 2 but is not a core point
    TreeCondition t;
    t.depth = 2;
    t.explicit_sets[{2}] = {3, 5};
    ASSERT_TRUE(validate_tree(t, u).empty());
    TreeCondition n = normalize_dense(t, u);
    EXPECT_EQ(successors(n, u, {2}), (IntSet{5}));
    EXPECT_TRUE(leq_star_tree(t, n, u));
    for (const auto& a : tree_nodes(n, u, 5)) EXPECT_TRUE(chain_normal(a, u));
}

TEST(PrikryTree, PruningACorePointIsReported) {
    auto u = small();  // node {2} projects its core point 3 to 1
    TreeCondition t;
    t.depth = 2;
    try {
        normalize_dense(t, u);
        FAIL();
    } catch (const PrikryError& e) {
        EXPECT_EQ(e.code(), "PruneBrokeLargeness");
    }
    TreeCondition bad;
    bad.trunk = {2, 3};
    EXPECT_THROW(normalize_dense(bad, u), PrikryError);
}

TEST(PrikryLimits, PairsAgainstDirectOracle) {
    auto u = small();
    auto pairs = increasing_tuples_of(u.ground, 2);
    for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        TupleSet x;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1u) x.insert(pairs[i]);
        ASSERT_EQ(limit_member(u, x, 2), direct_member(u, x, 2));
    }
}

TEST(PrikryLimits, CoordinateAndProjection) {
    auto u = small();
    // second coordinate of U_2 over `small`: pairs (2,3),(2,5),(4,5)
    EXPECT_TRUE(coordinate_member(u, {3, 5}, 2, 2));
    EXPECT_FALSE(coordinate_member(u, {5}, 2, 2));
    TupleFn last = [](const Seq& t) { return Seq{t.back()}; };
    EXPECT_TRUE(project_member(u, last, 2, {{3}, {5}}));
    EXPECT_FALSE(project_member(u, last, 2, {{5}}));
}

TEST(PrikryDiag, IdentityProjectionIsClassical) {
    Seq g{1, 2, 3, 4, 5, 6};
    std::map<int, IntSet> fam{{0, {1, 2, 3, 4, 5, 6}}, {1, {2, 4, 6}}, {3, {4, 5}}};
    std::map<int, int> id;
    EXPECT_EQ(modified_diag(g, fam, id), classical_diag(g, fam));
    EXPECT_EQ(classical_diag(g, fam), (IntSet{1, 2, 4}));
    std::map<int, int> down{{6, 1}};  // 6 only needs A_0
    EXPECT_TRUE(modified_diag(g, fam, down).count(6));
}

TEST(PrikrySeq, Clauses) {
    std::vector<Measure> ms{Measure{{3, 4}, {}}, Measure{{5, 6}, {{5, 2}}}};
    auto r = validate_sequence_condition({1}, {{5, 6, 7}}, ms);
    // level 2 uses V_2, whose projection sends min 5 to 2 > 1
    EXPECT_TRUE(r.ok());
    r = validate_sequence_condition({3}, {{5, 6}}, ms);
    EXPECT_FALSE(r.ok());
    ASSERT_EQ(r.min_clause.size(), 1u);
    EXPECT_FALSE(r.min_clause[0].second);
    EXPECT_FALSE(validate_single_condition({}, {3}, ms[0]).ok());
}

TEST(PrikryPPoint, FibreBound) {
    auto u = small();
    PointFn f{{1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 1}};
    EXPECT_TRUE(is_p_point(u, {}, {f}, 1));  // constant on the core {2,4}
    PointFn g{{1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 0}};
    EXPECT_TRUE(is_p_point(u, {}, {g}, 1));
    PointFn k{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 1}};
    EXPECT_FALSE(is_p_point(u, {1}, {k}, 1));  // core above 1 is {3,4,5}
    EXPECT_TRUE(is_p_point(u, {1}, {k}, 2));
}

TEST(PrikryDerived, ProfileAndApplication) {
    Derivation d;
    d.levels = {1, 1, 3};
    d.fns = {[](const Seq& t) { return t.back(); }, [](const Seq& t) { return t.back() * 2; },
             [](const Seq& t) { return t[0] + t[1] + t[2]; }};
    EXPECT_EQ(apply_derivation(d, {1, 2, 3}), (std::vector<int>{1, 2, 6}));
    EXPECT_THROW(apply_derivation(d, {1, 2}), PrikryError);
    Profile p = derivation_profile(d.levels);
    EXPECT_EQ(p.levels, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(p.multiplicity, (std::vector<std::size_t>{2, 1}));
    EXPECT_EQ(p.first_index, (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(derivation_profile({2, 1}), PrikryError);
}
