#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "brute_force.hpp"
#include "powertour/bounds.hpp"
#include "powertour/error.hpp"
#include "powertour/geometry.hpp"
#include "powertour/power_cost.hpp"
#include "powertour/random.hpp"

namespace pt = powertour;
using pt::testing::rel_close;

TEST(EuclideanDistance, CubeDiagonal) {
  EXPECT_NEAR(pt::euclidean_distance(std::vector<double>{0, 0, 0}, std::vector<double>{1, 1, 1}),
              std::sqrt(3.0), 1e-15);
}

TEST(EuclideanDistance, CodeWordPair) {
  EXPECT_NEAR(pt::euclidean_distance(std::vector<double>{0, 0, 0}, std::vector<double>{0, 1, 1}),
              std::sqrt(2.0), 1e-15);
}

TEST(EuclideanDistance, IdenticalPoints) {
  EXPECT_EQ(pt::euclidean_distance(std::vector<double>{0.3, 0.7}, std::vector<double>{0.3, 0.7}), 0.0);
}

TEST(EuclideanDistance, DimensionMismatchThrows) {
  EXPECT_THROW((void)pt::euclidean_distance(std::vector<double>{0, 0}, std::vector<double>{1, 1, 1}),
               pt::InputError);
}

TEST(PointSet, RejectsOutsideCube) {
  EXPECT_THROW(pt::PointSet(2, {{0.5, 1.5}}), pt::InputError);
  EXPECT_NO_THROW(pt::PointSet(2, {{0.5, 1.5}}, pt::Container::Unconstrained));
  EXPECT_THROW(pt::PointSet(2, {{0.6, 0.0}}, pt::Container::HalfCube), pt::InputError);
}

TEST(PointSet, RejectsMixedDimensionAndEmpty) {
  EXPECT_THROW(pt::PointSet(2, {{0.1, 0.2}, {0.1}}), pt::InputError);
  EXPECT_THROW(pt::PointSet(2, {}), pt::InputError);
  EXPECT_THROW(pt::PointSet(3, {{0.1, 0.2, 0.3}}, pt::Container::PlanarTriangle), pt::InputError);
}

TEST(PointSet, CubeVertexFlag) {
  EXPECT_TRUE(pt::PointSet(2, {{0, 1}, {1, 1}}).is_cube_vertex_set());
  EXPECT_FALSE(pt::PointSet(2, {{0, 1}, {0.5, 1}}).is_cube_vertex_set());
}

TEST(Edge, ZeroLengthAllowedSelfLoopRejected) {
  pt::PointSet x(2, {{0.2, 0.2}, {0.2, 0.2}});
  EXPECT_EQ(pt::make_edge(x, 0, 1).weight, 0.0);
  EXPECT_THROW((void)pt::make_edge(x, 1, 1), pt::InputError);
}

TEST(PowerCost, UnitSquareSides) {
  std::vector<double> sides{1, 1, 1, 1};
  const auto c = pt::power_cost_from_lengths(sides, 2);
  EXPECT_NEAR(c.unscaled, 4.0, 1e-12);
  EXPECT_NEAR(c.scaled, 2.0, 1e-12);
}

TEST(PowerCost, TwoDiagonals) {
  std::vector<double> lengths{std::sqrt(3.0), std::sqrt(3.0)};
  const auto c = pt::power_cost_from_lengths(lengths, 3);
  EXPECT_TRUE(rel_close(c.unscaled, 2.0 * std::pow(3.0, 1.5)));
  EXPECT_NEAR(c.unscaled, 10.3923, 1e-4);
}

TEST(PowerCost, EmptyIsZero) {
  const auto c = pt::power_cost_from_lengths({}, 7);
  EXPECT_EQ(c.unscaled, 0.0);
  EXPECT_EQ(c.scaled, 0.0);
  EXPECT_EQ(c.edge_count(), 0u);
}

TEST(PowerCost, ZeroEdgesCountedSeparately) {
  std::vector<double> lengths{0.0, 0.5, 0.0};
  const auto c = pt::power_cost_from_lengths(lengths, 2);
  EXPECT_EQ(c.zero_edges, 2u);
  EXPECT_EQ(c.log_terms.size(), 1u);
  EXPECT_NEAR(c.unscaled, 0.25, 1e-15);
}

TEST(PowerCost, LargeExponentReportsScaledDespiteOverflow) {
  const double diag = std::sqrt(1000.0);
  std::vector<double> lengths{diag, diag};
  const auto c = pt::power_cost_from_lengths(lengths, 1000);
  EXPECT_TRUE(c.overflow);
  EXPECT_TRUE(std::isinf(c.unscaled));
  EXPECT_TRUE(rel_close(c.scaled, std::pow(2.0, 1e-3) * diag));
  EXPECT_TRUE(rel_close(c.log_unscaled, std::log(2.0) + 1000.0 * std::log(diag)));
}

TEST(PowerCost, ScaledMatchesUnscaledAndIsPermutationInvariant) {
  pt::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(rng.below(12));
    std::vector<double> lengths(1 + rng.below(30));
    for (auto& w : lengths) w = rng.uniform(0.0, 2.0);
    const auto a = pt::power_cost_from_lengths(lengths, k);
    std::shuffle(lengths.begin(), lengths.end(), std::mt19937_64(trial));
    const auto b = pt::power_cost_from_lengths(lengths, k);
    EXPECT_EQ(a.unscaled, b.unscaled);
    EXPECT_EQ(a.scaled, b.scaled);
    EXPECT_TRUE(rel_close(std::exp(k * std::log(a.scaled)), a.unscaled));
    EXPECT_TRUE(rel_close(a.unscaled, pt::testing::direct_sum(lengths, k)));
  }
}

TEST(PowerCost, MonotoneUnderAddingEdges) {
  pt::Rng rng(5);
  std::vector<double> lengths;
  double last = 0.0;
  for (int i = 0; i < 100; ++i) {
    lengths.push_back(rng.uniform());
    const double s = pt::power_cost_from_lengths(lengths, 4).scaled;
    EXPECT_GE(s, last);
    last = s;
  }
}

TEST(LogDomain, LogLeHonoursRelativeTolerance) {
  EXPECT_TRUE(pt::log_le(std::log(1.0 + 1e-10), 0.0));
  EXPECT_FALSE(pt::log_le(std::log(1.0 + 1e-8), 0.0));
  EXPECT_TRUE(rel_close(pt::log_add(std::log(2.0), std::log(3.0)), std::log(5.0)));
}

TEST(NamedBounds, PlanarConjectureIsTwo) {
  EXPECT_NEAR(pt::named_bounds(2).conjectured_cycle, 2.0, 1e-12);
  EXPECT_NEAR(*pt::named_bounds(2).revised_path, std::sqrt(3.0), 1e-12);
}

TEST(NamedBounds, CubicValues) {
  const auto b = pt::named_bounds(3);
  EXPECT_NEAR(b.k3_lower, 2.2449, 1e-4);
  EXPECT_NEAR(b.mst_ball_packing, 10.1501, 1e-4);
  EXPECT_TRUE(rel_close(b.mst_ball_packing,
                        3.0 * std::sqrt(5.0) * std::cbrt(2.0 / 3.0) * std::sqrt(3.0)));
  EXPECT_TRUE(rel_close(b.bollobas_meir, std::pow(3.0, 2.0 - 1.0 / 3) * std::cbrt(2.0) * std::sqrt(3.0)));
  EXPECT_TRUE(rel_close(*b.revised_path, std::cbrt(3.0) * std::sqrt(2.0)));
  EXPECT_EQ(b.revised_cycle, b.k3_lower);
}

TEST(NamedBounds, OrderingHoldsForAllK) {
  for (unsigned k = 2; k <= 1000; ++k) {
    const auto b = pt::named_bounds(k);
    EXPECT_LE(b.conjectured_cycle, b.mst_ball_packing) << k;
    EXPECT_LE(b.mst_ball_packing, b.bollobas_meir) << k;
  }
  EXPECT_NEAR(*pt::named_bounds(7).revised_path, std::sqrt(7.0), 1e-12);
  EXPECT_THROW((void)pt::named_bounds(1), pt::InputError);
}

TEST(NamedBounds, GreedyAndCubeVertexBounds) {
  EXPECT_TRUE(rel_close(std::exp(pt::log_greedy_fixed_n_bound(4, 10)),
                        (2.0 + 8.0 * std::pow(2.0 / 3.0, 2.0)) * 16.0));
  EXPECT_TRUE(rel_close(std::exp(pt::log_greedy_fixed_n_bound(4, 2)), 32.0));
  EXPECT_TRUE(rel_close(std::exp(pt::log_cube_vertex_cycle_bound(4)), 32.0));
}

TEST(BoundCheck, FailsAboveBoundInLogDomain) {
  const auto ok = pt::check_upper("x", std::log(10.0), 2, std::log(9.0), true);
  EXPECT_TRUE(ok.pass);
  EXPECT_NEAR(ok.bound, std::sqrt(10.0), 1e-12);
  EXPECT_NEAR(ok.achieved, 3.0, 1e-12);
  EXPECT_FALSE(pt::check_upper("x", std::log(10.0), 2, std::log(10.1), true).pass);
}

TEST(Tolerance, RelativeAndAbsolute) {
  const pt::Tolerance tol;
  EXPECT_TRUE(tol.le(1.0 + 1e-10, 1.0));
  EXPECT_FALSE(tol.le(1.0 + 1e-8, 1.0));
  EXPECT_TRUE(tol.eq(0.0, 1e-13));
}
