#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "brute_force.hpp"
#include "powertour/constructions.hpp"
#include "powertour/graphs.hpp"
#include "powertour/mst.hpp"
#include "powertour/random.hpp"

namespace pt = powertour;

namespace {

std::set<std::pair<std::size_t, std::size_t>> edge_set(const std::vector<pt::Edge>& edges) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : edges) out.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  return out;
}

}  // namespace

TEST(BuildMst, SquareCornersWeighThree) {
  pt::PointSet x(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto t = pt::build_mst(x);
  EXPECT_TRUE(pt::validate(t, x).empty());
  EXPECT_NEAR(t.total_weight(), 3.0, 1e-12);
  EXPECT_NEAR(pt::testing::brute_min_spanning_weight(x), 3.0, 1e-12);
}

TEST(BuildMst, TwoPointsSingleEdge) {
  pt::PointSet x(3, {{0, 0, 0}, {0.5, 0.5, 0.5}});
  const auto t = pt::build_mst(x);
  ASSERT_EQ(t.edges.size(), 1u);
  EXPECT_EQ(std::min(t.edges[0].u, t.edges[0].v), 0u);
}

TEST(BuildMst, CollinearForcedPath) {
  pt::PointSet x(1, {{0.0}, {1.0}, {0.5}});
  const auto t = pt::build_mst(x);
  EXPECT_EQ(edge_set(t.edges), (std::set<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}}));
  EXPECT_NEAR(t.total_weight(), 1.0, 1e-15);
}

TEST(BuildMst, SinglePointHasNoEdges) {
  pt::PointSet x(2, {{0.5, 0.5}});
  const auto t = pt::build_mst(x);
  EXPECT_TRUE(t.edges.empty());
  EXPECT_EQ(t.vertices, std::vector<std::size_t>{0});
}

TEST(BuildMst, MatchesExhaustiveSpanningTreeSearch) {
  pt::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    const auto x = pt::uniform_cube(1 + rng.below(4), n, rng.next());
    const auto t = pt::build_mst(x);
    EXPECT_TRUE(pt::validate(t, x).empty());
    EXPECT_NEAR(t.total_weight(), pt::testing::brute_min_spanning_weight(x), 1e-12);
  }
}

TEST(BuildMst, TiesBrokenByIndex) {
  // All four sides tie; the first three by (min, max) index win.
  pt::PointSet x(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto t = pt::build_mst(x);
  EXPECT_EQ(edge_set(t.edges), (std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {1, 2}}));
  EXPECT_EQ(edge_set(pt::build_mst(x).edges), edge_set(t.edges));
}

TEST(ThresholdForest, ZeroCutoffGivesSingletons) {
  const auto x = pt::uniform_cube(3, 12, 5);
  const auto forest = pt::build_threshold_forest(x, 0.0);
  ASSERT_EQ(forest.size(), 12u);
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_EQ(forest[i].vertices, std::vector<std::size_t>{i});
    EXPECT_TRUE(forest[i].edges.empty());
  }
}

TEST(ThresholdForest, FullCutoffIsTheMst) {
  const auto x = pt::uniform_cube(4, 40, 6);
  const auto forest = pt::build_threshold_forest(x, 2.0);
  ASSERT_EQ(forest.size(), 1u);
  EXPECT_EQ(edge_set(forest[0].edges), edge_set(pt::build_mst(x).edges));
}

TEST(ThresholdForest, FullCutoffMatchesMstEdgeForEdgeOnTiedGrid) {
  std::vector<pt::Point> grid;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 6; ++j) grid.push_back({((i * 5) % 7) / 8.0, j / 8.0});
  }
  const pt::PointSet x(2, grid);
  const auto forest = pt::build_threshold_forest(x, 100.0);
  ASSERT_EQ(forest.size(), 1u);
  EXPECT_EQ(forest[0].edges, pt::build_mst(x).edges);
}

TEST(ThresholdForest, TwoClustersTwoTrees) {
  std::vector<pt::Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({0.0 + 0.1 * i, 0.05});
  for (int i = 0; i < 5; ++i) pts.push_back({0.0 + 0.1 * i, 0.95});
  pt::PointSet x(2, pts);
  const auto forest = pt::build_threshold_forest(x, 0.5);
  ASSERT_EQ(forest.size(), 2u);
  EXPECT_EQ(forest[0].vertices, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(forest[1].vertices, (std::vector<std::size_t>{5, 6, 7, 8, 9}));
}

TEST(ThresholdForest, EqualsMstRestrictedToCutoff) {
  pt::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + rng.below(5);
    const auto x = pt::uniform_cube(k, 2 + rng.below(60), rng.next());
    const double cutoff = rng.uniform(0.0, 1.0);
    std::set<std::pair<std::size_t, std::size_t>> restricted;
    for (const auto& e : pt::build_mst(x).edges) {
      if (e.weight <= cutoff) restricted.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::set<std::pair<std::size_t, std::size_t>> forest_edges;
    std::size_t covered = 0;
    const auto forest = pt::build_threshold_forest(x, cutoff);
    for (const auto& t : forest) {
      EXPECT_TRUE(pt::validate(t, x).empty());
      covered += t.vertices.size();
      for (const auto& e : t.edges) forest_edges.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    EXPECT_EQ(covered, x.size());
    EXPECT_EQ(forest_edges, restricted);
    for (std::size_t a = 0; a < forest.size(); ++a)
      for (std::size_t b = a + 1; b < forest.size(); ++b)
        for (auto u : forest[a].vertices)
          for (auto v : forest[b].vertices) EXPECT_GT(x.distance(u, v), cutoff);
  }
}

TEST(BallPacking, EmptyForRandomMsts) {
  pt::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = pt::uniform_cube(2 + rng.below(9), 3 + rng.below(48), rng.next());
    EXPECT_TRUE(pt::mst_ball_packing_check(pt::build_mst(x), x).empty());
  }
}

TEST(BallPacking, BadTreeDetected) {
  // Long edge 0-2 has its midpoint ball covering the centre of the short edge 1-2.
  pt::PointSet x(2, {{0.0, 0.5}, {0.45, 0.52}, {1.0, 0.5}});
  pt::SpanningTree bad{{0, 1, 2}, {pt::make_edge(x, 0, 2), pt::make_edge(x, 1, 2)}};
  EXPECT_TRUE(pt::validate(bad, x).empty());
  EXPECT_FALSE(pt::mst_ball_packing_check(bad, x).empty());
  EXPECT_TRUE(pt::mst_ball_packing_check(pt::build_mst(x), x).empty());
}

TEST(BallPacking, SingleEdgeHasNoPairs) {
  pt::PointSet x(2, {{0.0, 0.0}, {1.0, 1.0}});
  EXPECT_TRUE(pt::mst_ball_packing_check(pt::build_mst(x), x).empty());
}
