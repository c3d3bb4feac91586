#pragma once

#include <cstddef>
#include <optional>

#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"
#include "powertour/power_cost.hpp"

namespace powertour {

struct PhaseReport {
  double cutoff = 0.0;
  std::size_t tree_count = 0;
  std::size_t largest_tree = 0;
  PowerCost forest_cost;      // threshold forest edges
  PowerCost cycles_cost;      // union of the per-tree cycles
  PowerCost initial_paths;    // F_0 after dropping one edge per cycle
  PowerCost greedy_added;     // edges added by the warm-started greedy pass
  PowerCost tour_cost;
};

struct TwoPhaseResult {
  Tour tour;
  PhaseReport report;
};

/// Threshold forest (default cutoff k^(-1/4)) -> cube cycle per tree of >= 3
/// vertices -> drop each cycle's longest edge -> warm-started greedy -> close.
[[nodiscard]] TwoPhaseResult two_phase_tour(const PointSet& points, unsigned k,
                                            std::optional<double> cutoff = {});

}  // namespace powertour
