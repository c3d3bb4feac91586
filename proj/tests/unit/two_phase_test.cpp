#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "brute_force.hpp"
#include "powertour/bounds.hpp"
#include "powertour/constructions.hpp"
#include "powertour/graphs.hpp"
#include "powertour/greedy_path.hpp"
#include "powertour/mst.hpp"
#include "powertour/random.hpp"
#include "powertour/sekanina.hpp"
#include "powertour/two_phase.hpp"

namespace pt = powertour;

TEST(TwoPhase, SparsePointsReduceToGreedy) {
  pt::PointSet x(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
  const auto r = pt::two_phase_tour(x, 2, 0.5);
  EXPECT_EQ(r.report.tree_count, 5u);
  EXPECT_EQ(r.report.largest_tree, 1u);
  const auto plain = pt::close_path(pt::greedy_ham_path(x).path, x);
  EXPECT_EQ(r.tour.order, plain.order);
}

TEST(TwoPhase, DefaultCutoff) {
  const auto x = pt::uniform_cube(4, 30, 2);
  EXPECT_NEAR(pt::two_phase_tour(x, 4).report.cutoff, std::pow(4.0, -0.25), 1e-15);
}

TEST(TwoPhase, SingleClusterIsTheCycleMinusItsLongestEdge) {
  pt::Rng rng(7);
  std::vector<pt::Point> pts;
  for (int i = 0; i < 25; ++i) pts.push_back({0.4 + 0.1 * rng.uniform(), 0.4 + 0.1 * rng.uniform(), 0.5});
  pt::PointSet x(3, pts);
  const auto r = pt::two_phase_tour(x, 3);
  EXPECT_EQ(r.report.tree_count, 1u);
  EXPECT_EQ(r.report.greedy_added.edge_count(), 0u);

  const auto mst = pt::build_mst(x);
  const auto cycle = pt::tree_cube_cycle(mst, x);
  std::size_t longest = 0;
  for (std::size_t i = 1; i < cycle.tour.edges.size(); ++i) {
    if (cycle.tour.edges[i].weight > cycle.tour.edges[longest].weight) longest = i;
  }
  std::vector<pt::Edge> remaining = cycle.tour.edges;
  remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(longest));
  EXPECT_TRUE(pt::testing::rel_close(r.report.initial_paths.unscaled,
                                     pt::power_cost(remaining, 3).unscaled));
  EXPECT_TRUE(pt::testing::rel_close(r.report.tour_cost.unscaled,
                                     pt::power_cost(cycle.tour.edges, 3).unscaled));
  double tree = 0.0;
  for (const auto& e : mst.edges) tree += std::pow(e.weight, 3);
  EXPECT_LE(r.report.tour_cost.unscaled, (2.0 / 3.0) * 27 * tree * (1 + 1e-9));
}

TEST(TwoPhase, RandomSixDimensionalWithinCertifiedBound) {
  const auto bound = pt::named_bounds(6).mst_ball_packing;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto x = pt::uniform_cube(6, 200, seed);
    const auto r = pt::two_phase_tour(x, 6);
    EXPECT_TRUE(pt::validate(r.tour, x).empty());
    EXPECT_LE(r.report.tour_cost.scaled, bound);
  }
}

TEST(TwoPhase, DegenerateInputs) {
  pt::PointSet dup(2, {{0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}, {0.9, 0.1}});
  EXPECT_TRUE(pt::validate(pt::two_phase_tour(dup, 2).tour, dup).empty());
  pt::PointSet two(3, {{0, 0, 0}, {1, 1, 1}});
  const auto r = pt::two_phase_tour(two, 3);
  EXPECT_TRUE(pt::validate(r.tour, two).empty());
  EXPECT_TRUE(pt::testing::rel_close(r.report.tour_cost.unscaled, 2 * std::pow(3.0, 1.5)));
}

TEST(TwoPhase, InitialPathsWithinPerTreeBound) {
  pt::Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(rng.below(7));
    const auto x = pt::clustered(k, 10 + rng.below(150), 1 + rng.below(6), 0.1, rng.next());
    const auto r = pt::two_phase_tour(x, k);
    EXPECT_TRUE(pt::validate(r.tour, x).empty());
    double forest = 0.0;
    for (const auto& t : pt::build_threshold_forest(x, r.report.cutoff))
      for (const auto& e : t.edges) forest += std::pow(e.weight, k);
    EXPECT_LE(r.report.initial_paths.unscaled, std::pow(3.0, k) * forest * (1 + 1e-9) + 1e-300);
    EXPECT_LE(r.report.initial_paths.unscaled, r.report.cycles_cost.unscaled * (1 + 1e-12));
  }
}
