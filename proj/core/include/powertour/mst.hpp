#pragma once

#include <utility>
#include <vector>

#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"

namespace powertour {

/// Euclidean MST by Kruskal over all n(n-1)/2 pairs. Equal-length edges are
/// taken in (min index, max index) order, so the tree is reproducible.
[[nodiscard]] SpanningTree build_mst(const PointSet& points);

/// Kruskal restricted to edges of length <= cutoff. One tree per component,
/// ordered by smallest vertex; singletons are trees without edges.
[[nodiscard]] std::vector<SpanningTree> build_threshold_forest(const PointSet& points,
                                                               double cutoff);

/// Pairs of tree edges whose midpoint balls of radius |e|/4 intersect.
/// Empty for every true MST.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> mst_ball_packing_check(
    const SpanningTree& t, const PointSet& points, double abs_tol = 1e-12);

}  // namespace powertour
