#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"

namespace powertour {

struct GreedyResult {
  HamPath path;
  std::vector<Edge> trace;  // inserted edges, in insertion order
};

/// Greedy path merging: repeatedly add the shortest edge that keeps the edge
/// set a vertex-disjoint union of paths, until one path remains.
///
/// An edge that is infeasible once stays infeasible (degrees only grow and
/// components only merge), so a single pass over all pairs sorted by
/// (length, min index, max index) picks exactly the step-wise minimum.
/// A warm start begins from the given path system instead of n singletons.
[[nodiscard]] GreedyResult greedy_ham_path(const PointSet& points,
                                           const std::optional<PathSystem>& warm_start = {});

/// Number of trace edges with |e|^2 >= j.
[[nodiscard]] std::size_t greedy_edge_count_by_length(const std::vector<Edge>& trace, double j);

struct EdgeClasses {
  std::size_t short_edges = 0;      // |e|^2 <= k/5
  std::size_t medium_edges = 0;     // k/5 < |e|^2 <= 3k/5
  std::size_t long_edges = 0;       // 3k/5 < |e|^2 <= 2k/3
  std::size_t very_long_edges = 0;  // 2k/3 < |e|^2
};

[[nodiscard]] EdgeClasses classify_edges(const std::vector<Edge>& edges, unsigned k);
[[nodiscard]] EdgeClasses classify_edges(const HamPath& path, unsigned k);

}  // namespace powertour
