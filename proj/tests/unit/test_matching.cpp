#include <gtest/gtest.h>

#include <random>

#include "graphs.hpp"
#include "oracles.hpp"
#include "sep/errors.hpp"
#include "sep/matching.hpp"

using namespace sep;
using sep::testing::from_edges;

namespace {

std::vector<Int> V(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return v;
}

IntPoly P(std::initializer_list<long> c) { return IntPoly(V(c)); }

} // namespace

TEST(MatchingCounts, Examples) {
    EXPECT_EQ(matching_counts(families::cycle(4)), V({1, 4, 2}));
    EXPECT_EQ(matching_counts(families::cycle(3)), V({1, 3}));
    EXPECT_EQ(matching_counts(families::empty(4)), V({1}));
    EXPECT_EQ(matching_counts(Graph(0)), V({1}));
    EXPECT_EQ(matching_generating_poly(families::cycle(4)), P({1, 4, 2}));
    EXPECT_EQ(matching_generating_poly(families::cycle(3)), P({1, 3}));
    EXPECT_EQ(matching_generating_poly(families::path(3)), P({1, 2}));
}

TEST(MatchingPoly, Examples) {
    EXPECT_EQ(matching_poly(families::cycle(4)), P({2, 0, -4, 0, 1}));
    EXPECT_EQ(matching_poly(families::path(2)), P({-1, 0, 1}));
    EXPECT_EQ(matching_poly(families::empty(3)), P({0, 0, 0, 1}));
    EXPECT_EQ(matching_poly(Graph(0)), P({1}));
}

TEST(MatchedVertexSets, Examples) {
    EXPECT_EQ(matched_vertex_sets(families::cycle(4)), V({1, 4, 1}));
    EXPECT_EQ(matched_vertex_sets(families::cycle(3)), V({1, 3}));
    EXPECT_EQ(matched_vertex_sets(from_edges(4, {{1, 2}, {3, 4}})), V({1, 2, 1}));
    EXPECT_EQ(matched_vertex_sets_formula(families::cycle(4)), V({1, 4, 1}));
    EXPECT_EQ(matched_vertex_sets_formula(families::cycle(3)), V({1, 3}));
    EXPECT_EQ(matched_vertex_sets_formula(families::cycle(6)).back(), Int(1));
    EXPECT_EQ(matching_counts(families::cycle(6)).back(), Int(2));
    EXPECT_THROW(matched_vertex_sets_formula(families::complete(4)), PreconditionError);
    EXPECT_THROW(matched_vertex_sets(families::empty(17)), BoundExceeded);
}

TEST(Independence, Examples) {
    EXPECT_EQ(independence_poly(families::cycle(4)), P({1, 4, 2}));
    EXPECT_EQ(independence_poly(families::complete(6)), P({1, 6}));
    EXPECT_EQ(independence_poly(families::empty(3)), P({1, 3, 3, 1}));
    EXPECT_EQ(independence_poly(Graph(0)), P({1}));
    EXPECT_THROW(independence_poly(families::empty(25)), BoundExceeded);
}

TEST(MatchingOracles, AllGraphsUpToSix) {
    for (int n = 0; n <= 6; ++n)
        sep::testing::for_each_labeled_graph(n, [](const Graph& g) {
            auto m = matching_counts(g);
            ASSERT_EQ(m, sep::testing::brute_matching_counts(g));
            auto mv = matched_vertex_sets(g);
            ASSERT_EQ(mv, sep::testing::brute_matched_vertex_sets(g));
            EXPECT_EQ(m[0], 1);
            EXPECT_EQ(mv[0], 1);
            ASSERT_EQ(m.size(), mv.size());
            for (std::size_t k = 0; k < m.size(); ++k) EXPECT_LE(mv[k], m[k]);
            EXPECT_LE(m.size(), static_cast<std::size_t>(g.order()) / 2 + 1);
            ASSERT_EQ(independence_poly(g), sep::testing::brute_independence(g));
        });
}

TEST(MatchingOracles, FormulaAgreesUnderEvenCycleCondition) {
    int checked = 0;
    for (int n = 0; n <= 6; ++n)
        sep::testing::for_each_labeled_graph(n, [&](const Graph& g) {
            if (!classify(g).unique_even_cycle_condition) {
                EXPECT_THROW(matched_vertex_sets_formula(g), PreconditionError);
                return;
            }
            ++checked;
            ASSERT_EQ(matched_vertex_sets_formula(g), matched_vertex_sets(g));
        });
    EXPECT_GT(checked, 1000);
    for (const auto& g : sep::testing::nonisomorphic_graphs(7))
        if (classify(g).unique_even_cycle_condition) ASSERT_EQ(matched_vertex_sets_formula(g), matched_vertex_sets(g));
    std::mt19937 rng(8);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Edge> edges;
        for (int u = 1; u <= 8; ++u)
            for (int v = u + 1; v <= 8; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g(8, edges);
        if (classify(g).unique_even_cycle_condition) ASSERT_EQ(matched_vertex_sets_formula(g), matched_vertex_sets(g));
    }
}

TEST(MatchingIdentities, LineGraphAndAlpha) {
    for (int n = 0; n <= 6; ++n)
        sep::testing::for_each_labeled_graph(n, [](const Graph& g) {
            IntPoly gen = matching_generating_poly(g);
            ASSERT_EQ(gen, independence_poly(line_graph(g)));
            IntPoly alpha = matching_poly(g);
            EXPECT_EQ(alpha.degree(), g.order());
            for (int k = 0; 2 * k <= g.order(); ++k) {
                Int expected = (k % 2 == 0) ? gen.coeff(k) : Int(-gen.coeff(k));
                EXPECT_EQ(alpha.coeff(g.order() - 2 * k), expected);
            }
        });
}

TEST(MatchingIdentities, AlphaRealRootedUpToSeven) {
    for (const auto& g : sep::testing::nonisomorphic_graphs_up_to(7)) ASSERT_TRUE(is_real_rooted(matching_poly(g))) << to_edge_list(g);
}

TEST(MatchingIdentities, LucasRecurrence) {
    IntPoly l1 = P({1}), l2 = P({1, 2});
    IntPoly prev = l1, cur = l2;
    for (int n = 3; n <= 12; ++n) {
        IntPoly next = cur + prev.shift(1);
        EXPECT_EQ(matching_generating_poly(families::cycle(n)), next) << n;
        prev = cur;
        cur = next;
    }
}
