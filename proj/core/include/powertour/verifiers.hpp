#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powertour/bounds.hpp"
#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"
#include "powertour/power_cost.hpp"

namespace powertour {

struct HalfCubePairCheck {
  double lhs = 0.0;  // |u+v|/2 + |u-v|/4
  double rhs = 0.0;  // (sqrt5/4) sqrt k
  bool ok = false;
};

/// u, v must lie in [-1/2,1/2]^k (within tol), else InputError.
[[nodiscard]] HalfCubePairCheck lemma5_check(const Point& u, const Point& v, double tol = 1e-12);

/// Minimum pairwise Hamming distance of a subset of {0,1}^k (n >= 2).
[[nodiscard]] std::size_t hamming_min_distance(const PointSet& x);

struct SingletonCheck {
  double singleton_bound = 0.0;           // 2^(k-d+1)
  std::optional<double> improved_bound;   // 2^(k-1.5d+2), only when d < 2k/3
  bool singleton_ok = false;
  bool improved_ok = true;
};

[[nodiscard]] SingletonCheck singleton_check(std::size_t k, std::size_t d, std::size_t size);

struct NearestNeighborCheck {
  double sum = 0.0;             // sum of squared nearest-neighbour distances
  double tour_cost = 0.0;       // S_2 of the tour
  bool dominated_by_tour = false;
  bool within_four = false;
};

[[nodiscard]] NearestNeighborCheck nearest_neighbor_sum_check(const PointSet& x, const Tour& t);

/// One algorithm's output as fed to bound_report.
struct AlgorithmRun {
  std::string algorithm;  // mst-sekanina | greedy | two-phase | newman2d | oracle | ...
  PowerCost cost;
  std::optional<double> wall_ms;
};

struct AlgorithmResult {
  AlgorithmRun run;
  std::vector<BoundCheck> checks;
};

struct BoundReport {
  std::string instance;
  unsigned k = 2;
  std::size_t n = 0;
  NamedBounds bounds;
  std::vector<AlgorithmResult> results;

  [[nodiscard]] bool certified_pass() const;
};

/// Compares every run against the named bounds that apply to it. Upper
/// bounds proven for a construction are marked certified; an oracle run,
/// when present, becomes a certified lower bound for all other runs.
[[nodiscard]] BoundReport bound_report(const PointSet& points, unsigned k,
                                       std::vector<AlgorithmRun> runs,
                                       std::string instance = "");

}  // namespace powertour
