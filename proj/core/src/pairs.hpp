#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "powertour/geometry.hpp"

namespace powertour::detail {

struct PairEdge {
  double sq;  // squared length
  std::uint32_t u;
  std::uint32_t v;  // u < v
};

/// All pairs with squared length <= max_sq, sorted by (squared length, u, v).
/// When `only` is non-empty, pairs are restricted to vertices flagged there.
std::vector<PairEdge> sorted_pairs(const PointSet& points,
                                   double max_sq = std::numeric_limits<double>::infinity(),
                                   const std::vector<bool>& only = {});

}  // namespace powertour::detail
