#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "brute_force.hpp"
#include "powertour/constructions.hpp"
#include "powertour/error.hpp"

namespace pt = powertour;
using pt::testing::brute_min_tour;
using pt::testing::rel_close;

TEST(DiagonalPair, OptimalToursMatchClosedForm) {
  EXPECT_NEAR(brute_min_tour(pt::diagonal_pair(3), 3), 10.3923, 1e-4);
  EXPECT_TRUE(rel_close(brute_min_tour(pt::diagonal_pair(3), 3), 2 * std::pow(3.0, 1.5)));
  EXPECT_NEAR(brute_min_tour(pt::diagonal_pair(4), 4), 32.0, 1e-12);
  EXPECT_NEAR(brute_min_tour(pt::diagonal_pair(1), 1), 2.0, 1e-12);
}

TEST(K3Code, EquidistantAndOptimalTour) {
  const auto x = pt::k3_code4();
  ASSERT_EQ(x.size(), 4u);
  EXPECT_EQ(x.points(), (std::vector<pt::Point>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_NEAR(x.distance(i, j), std::sqrt(2.0), 1e-15);
  const double s = brute_min_tour(x, 3);
  EXPECT_TRUE(rel_close(s, 4 * std::pow(2.0, 1.5)));
  EXPECT_TRUE(rel_close(std::cbrt(s), std::pow(2.0, 7.0 / 6.0)));
  EXPECT_TRUE(rel_close(pt::testing::brute_min_matching(x, 3), 2 * std::pow(2.0, 1.5)));
}

TEST(K4Code, EightEvenWeightVectors) {
  const auto x = pt::k4_even_weight_code();
  ASSERT_EQ(x.size(), 8u);
  for (const auto& p : x.points()) {
    int ones = 0;
    for (double c : p) ones += c == 1.0;
    EXPECT_EQ(ones % 2, 0);
  }
  std::set<double> squared;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) squared.insert(x.squared_distance(i, j));
  EXPECT_EQ(squared, (std::set<double>{2.0, 4.0}));
  EXPECT_LE(x.size(), std::exp2(4 - 2 + 1));
  EXPECT_NEAR(brute_min_tour(x, 4), 32.0, 1e-9);
  EXPECT_EQ(pt::even_weight_code(4).points(), x.points());
}

TEST(EvenWeightCode, SizeAndMinimumDistance) {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto x = pt::even_weight_code(k);
    EXPECT_EQ(x.size(), std::size_t{1} << (k - 1));
    double best = 1e9;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) best = std::min(best, x.squared_distance(i, j));
    EXPECT_EQ(best, 2.0);
  }
  EXPECT_THROW((void)pt::even_weight_code(30), pt::InputError);
}

TEST(PlanarTightSets, ThreeTightSets) {
  const auto sets = pt::figure1_sets();
  EXPECT_EQ(sets.corners.size(), 4u);
  EXPECT_EQ(sets.pair.size(), 2u);
  EXPECT_EQ(sets.five.size(), 5u);
  for (const auto* x : {&sets.corners, &sets.pair, &sets.five}) {
    EXPECT_NEAR(brute_min_tour(*x, 2), 4.0, 1e-12);
  }
  EXPECT_NEAR(pt::testing::brute_min_matching(sets.corners, 2), 2.0, 1e-12);
}

TEST(HalfCubeTightVectors, TightValues) {
  for (std::size_t k = 5; k <= 50; k += 5) {
    const auto [u, v] = pt::lemma5_tight_vectors(k);
    double plus = 0, minus = 0;
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_LE(std::abs(u[i]), 0.5);
      EXPECT_LE(std::abs(v[i]), 0.5);
      plus += (u[i] + v[i]) * (u[i] + v[i]);
      minus += (u[i] - v[i]) * (u[i] - v[i]);
    }
    const double value = std::sqrt(plus) / 2 + std::sqrt(minus) / 4;
    EXPECT_TRUE(rel_close(value, std::sqrt(5.0) / 4 * std::sqrt(double(k))));
    if (k == 5) {
      EXPECT_NEAR(value, 1.25, 1e-12);
    }
    if (k == 10) {
      EXPECT_NEAR(value, 1.7678, 1e-4);
    }
  }
  EXPECT_THROW((void)pt::lemma5_tight_vectors(7), pt::InputError);
  EXPECT_THROW((void)pt::lemma5_tight_vectors(0), pt::InputError);
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(pt::uniform_cube(3, 100, 42).points(), pt::uniform_cube(3, 100, 42).points());
  EXPECT_NE(pt::uniform_cube(3, 100, 42).points(), pt::uniform_cube(3, 100, 43).points());
  EXPECT_EQ(pt::clustered(4, 50, 3, 0.05, 1).points(), pt::clustered(4, 50, 3, 0.05, 1).points());
  EXPECT_EQ(pt::cube_vertex_subset(10, 100, 3).points(), pt::cube_vertex_subset(10, 100, 3).points());
}

TEST(Generators, CubeVertexSubsetDistinct) {
  const auto x = pt::cube_vertex_subset(30, 1000, 7);
  EXPECT_EQ(x.size(), 1000u);
  EXPECT_TRUE(x.is_cube_vertex_set());
  std::set<pt::Point> seen(x.points().begin(), x.points().end());
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(pt::cube_vertex_subset(3, 8, 1).size(), 8u);
  EXPECT_THROW((void)pt::cube_vertex_subset(3, 9, 1), pt::InputError);
}

TEST(Generators, Containers) {
  const auto h = pt::uniform_half_cube(5, 200, 4);
  EXPECT_EQ(h.container(), pt::Container::HalfCube);
  for (const auto& p : h.points())
    for (double c : p) EXPECT_LE(std::abs(c), 0.5);
  const auto c = pt::clustered(3, 200, 4, 0.5, 9);
  for (const auto& p : c.points())
    for (double v : p) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
}
