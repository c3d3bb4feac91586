#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"
#include "powertour/power_cost.hpp"

namespace powertour {

inline constexpr std::size_t kMaxOracleTour = 12;
inline constexpr std::size_t kMaxOracleMatching = 14;
inline constexpr std::size_t kMaxPairSumM = 14;

struct OracleTour {
  Tour tour;
  PowerCost cost;
};

struct OraclePath {
  HamPath path;
  PowerCost cost;
};

struct OracleMatching {
  Matching matching;
  PowerCost cost;
};

/// Minimum-S_k tour by depth-first enumeration with vertex 0 first and the
/// reversal symmetry removed. Among equal costs the lexicographically first
/// order wins. 2 <= n <= 12.
[[nodiscard]] OracleTour exact_min_tour(const PointSet& points, unsigned k);

/// Minimum-S_k Hamiltonian path, n <= 12.
[[nodiscard]] OraclePath exact_min_path(const PointSet& points, unsigned k);

/// Minimum-S_k perfect matching, n even, n <= 14.
[[nodiscard]] OracleMatching exact_min_matching(const PointSet& points, unsigned k);

struct PairSumMax {
  std::uint64_t value = 0;
  std::vector<int> witness;  // q_i in {0,1}
};

/// max over q in [0,1]^m of sum_{i<j} (q_i - q_j)^2, by enumerating the 2^m
/// vertices of the cube. The objective is convex in each coordinate
/// separately, so a maximiser can be pushed coordinate by coordinate to an
/// endpoint of [0,1] without decreasing it. 1 <= m <= 14.
[[nodiscard]] PairSumMax lemma7_max_pair_sum(std::size_t m);

struct ClosestPairCheck {
  std::size_t p = 0;
  std::size_t q = 0;
  double squared_distance = 0.0;
  double bound = 0.0;
  bool ok = false;
};

/// Box [0,delta]^k1 x [0,gamma]^k2; the default is the unit cube.
struct BoxShape {
  double delta = 1.0;
  double gamma = 1.0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
};

/// Closest pair of X against (floor(m/2) ceil(m/2) / C(m,2)) (delta^2 k1 + gamma^2 k2).
/// Requires |X| >= m >= 2.
[[nodiscard]] ClosestPairCheck closest_pair_bound_check(const PointSet& x, std::size_t m);
[[nodiscard]] ClosestPairCheck closest_pair_bound_check(const PointSet& x, std::size_t m,
                                                        const BoxShape& box);

}  // namespace powertour
