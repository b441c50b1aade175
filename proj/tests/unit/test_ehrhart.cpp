#include <gtest/gtest.h>

#include "graphs.hpp"
#include "oracles.hpp"
#include "sep/ehrhart.hpp"
#include "sep/errors.hpp"
#include "sep/gamma.hpp"

using namespace sep;
using sep::testing::from_edges;

namespace {

IntPoly P(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

std::vector<Int> I(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

} // namespace

TEST(Polytope, Dimensions) {
    EXPECT_EQ(build_a(families::path(2)).dim, 1);
    EXPECT_EQ(build_a(families::cycle(3)).dim, 2);
    EXPECT_EQ(build_a(suspension(families::cycle(4))).dim, 4);
    EXPECT_EQ(build_b(families::empty(3)).dim, 3);
    EXPECT_THROW(build_a(families::empty(3)), PreconditionError);
    for (const auto& g : sep::testing::nonisomorphic_graphs_up_to(5)) {
        if (g.size() == 0) continue;
        EXPECT_EQ(build_a(g).dim, g.order() - component_count(g)) << to_edge_list(g);
        EXPECT_EQ(build_b(g).dim, g.order());
        EXPECT_EQ(build_a(suspension(g)).dim, g.order());
    }
}

TEST(Polytope, ReducedCoordinates) {
    auto p = build_a(families::cycle(3));
    EXPECT_EQ(p.lattice_basis.size(), 2u);
    EXPECT_EQ(p.reduced.size(), p.points.size());
    for (std::size_t i = 0; i < p.points.size(); ++i) EXPECT_EQ(p.to_reduced(p.points[i]), p.reduced[i]);
    EXPECT_FALSE(p.to_reduced(Point{1, 0, 0}).has_value());
    EXPECT_TRUE(p.to_reduced(Point{2, -1, -1}).has_value());
}

TEST(Ehrhart, HexagonCounts) {
    auto hex = build_a(families::cycle(3));
    EXPECT_EQ(count_points(hex, 0), 1);
    EXPECT_EQ(count_points(hex, 1), 7);
    EXPECT_EQ(count_points(hex, 2), 19);
    for (int t = 0; t <= 6; ++t) EXPECT_EQ(count_points(hex, t), sep::testing::hexagon_count(t)) << t;
    EXPECT_EQ(ehrhart(hex).hstar, P({1, 4, 1}));
}

TEST(Ehrhart, FacetCounts) {
    EXPECT_EQ(h_representation(build_a(families::cycle(3))).size(), 6u);
    EXPECT_EQ(h_representation(build_b(families::path(2))).size(), 4u);
    EXPECT_EQ(h_representation(build_b(families::empty(2))).size(), 4u);
    EXPECT_EQ(h_representation(build_b(families::empty(3))).size(), 8u);
    EXPECT_EQ(h_representation(build_a(families::path(2))).size(), 2u);
}

TEST(Ehrhart, SmallPolytopes) {
    auto seg = build_a(families::path(2));
    for (int t = 0; t <= 5; ++t) EXPECT_EQ(count_points(seg, t), 2 * t + 1);
    EXPECT_EQ(ehrhart(seg).hstar, P({1, 1}));

    auto square = build_b(families::path(2));
    for (int t = 0; t <= 4; ++t) EXPECT_EQ(count_points(square, t), (2 * t + 1) * (2 * t + 1));
    EXPECT_EQ(ehrhart(square).hstar, P({1, 6, 1}));

    auto octa = build_b(families::empty(3));
    for (int t = 0; t <= 4; ++t) EXPECT_EQ(count_points(octa, t), (2 * t + 1) * (2 * t * t + 2 * t + 3) / 3);
    EXPECT_EQ(ehrhart(octa).hstar, P({1, 3, 3, 1}));
}

TEST(Ehrhart, HstarFromCounts) {
    EXPECT_EQ(hstar_from_counts(I({1, 3, 5}), 1), P({1, 1}));
    EXPECT_EQ(hstar_from_counts(I({1, 7, 19, 37}), 2), P({1, 4, 1}));
    EXPECT_THROW(hstar_from_counts(I({1, 3, 6}), 1), VerificationError);
    EXPECT_THROW(hstar_from_counts(I({2, 3, 4}), 1), PreconditionError);
    EXPECT_THROW(hstar_from_counts(I({1, 3}), 1), PreconditionError);
}

TEST(Ehrhart, CountsFollowTheInterpolant) {
    for (const auto& p : {build_a(suspension(families::cycle(4))), build_b(families::cycle(4)),
                          build_a(suspension(families::complete(3)))}) {
        auto data = ehrhart(p);
        ASSERT_EQ(data.counts.size(), static_cast<std::size_t>(data.dim + 2));
        for (int t = data.dim + 2; t <= data.dim + 3; ++t)
            EXPECT_EQ(Rat(count_points(p, t)), sep::testing::lagrange_at(data.counts, t)) << t;
    }
}

TEST(Ehrhart, ReductionPreservesCounts) {
    auto p = build_a(families::cycle(4));
    auto r = reduce_to_full_dim(p);
    EXPECT_EQ(r.ambient_dim, p.dim);
    EXPECT_EQ(r.dim, p.dim);
    for (int t = 0; t <= 3; ++t) EXPECT_EQ(count_points(r, t), count_points(p, t));
}

TEST(Ehrhart, ReflexivityPattern) {
    for (const auto& g : sep::testing::nonisomorphic_graphs_up_to(4)) {
        if (g.order() == 0) continue;
        auto b = ehrhart(build_b(g));
        EXPECT_EQ(b.dim, g.order());
        EXPECT_EQ(reflexivity_check(b.hstar, b.dim), classify(g).bipartite) << to_edge_list(g);
        auto a = ehrhart(build_a(suspension(g)));
        EXPECT_TRUE(reflexivity_check(a.hstar, a.dim)) << to_edge_list(g);
    }
    EXPECT_FALSE(reflexivity_check(P({1, 2}), 1));
    EXPECT_FALSE(reflexivity_check(P({1, 1}), 2));
    EXPECT_TRUE(reflexivity_check(P({1, 1}), 1));
}

TEST(Ehrhart, AgreesWithFormulas) {
    for (int n = 1; n <= 4; ++n)
        sep::testing::for_each_labeled_graph(n, [](const Graph& g) {
            auto c = classify(g);
            if (c.connected) EXPECT_EQ(gamma_a_ehrhart(g).hstar, gamma_a_cut_sum(g).hstar) << to_edge_list(g);
            if (c.bipartite) EXPECT_EQ(gamma_b_ehrhart(g).hstar, gamma_b_interior(g).hstar) << to_edge_list(g);
        });
    EXPECT_EQ(gamma_a_ehrhart(families::cycle(5)).gamma, P({1, 10, 20}));
    EXPECT_EQ(gamma_b_ehrhart(families::cycle(4)).volume, 96);
}

TEST(Ehrhart, Bounds) {
    Limits tight;
    tight.max_hrep_dim = 2;
    EXPECT_THROW(h_representation(build_b(families::empty(3)), tight), BoundExceeded);
    tight = Limits{};
    tight.max_hrep_points = 4;
    EXPECT_THROW(h_representation(build_b(families::path(2)), tight), BoundExceeded);
    tight = Limits{};
    tight.max_box_points = 10;
    EXPECT_THROW(count_points(build_b(families::empty(3)), 3, tight), BoundExceeded);
}
