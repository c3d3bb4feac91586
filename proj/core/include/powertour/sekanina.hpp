#pragma once

#include <cstddef>
#include <vector>

#include "powertour/bounds.hpp"
#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"
#include "powertour/power_cost.hpp"

namespace powertour {

/// Which tree edges each cycle edge travels over, and how often each tree
/// edge is travelled in total.
struct UsageCertificate {
  std::vector<std::vector<std::size_t>> hop_paths;  // per cycle edge: tree edge ids
  std::vector<unsigned> usage;                      // per tree edge
};

struct CubeCycle {
  Tour tour;  // order over t.vertices only
  UsageCertificate certificate;
};

/// Hamiltonian cycle of the tree's cube T^3: consecutive vertices lie at tree
/// distance <= 3, every tree edge is used exactly twice, and the cycle edge
/// closing at `anchor` is a tree edge.
///
/// The order is a DFS from the anchor in which vertices at even depth are
/// emitted on entry and vertices at odd depth on exit. Every subtree then
/// occupies one contiguous arc of the cycle, which gives the usage count of
/// two, and the parity alternation keeps each hop within three tree edges.
/// Iterative, so deep trees do not exhaust the stack.
///
/// Throws InputError if the tree has fewer than 3 vertices, InternalError if
/// the certificate fails its own check.
[[nodiscard]] CubeCycle tree_cube_cycle(const SpanningTree& t, const PointSet& points,
                                        std::size_t anchor);
[[nodiscard]] CubeCycle tree_cube_cycle(const SpanningTree& t, const PointSet& points);

/// Empty iff the certificate matches the tour and tree: hop paths are genuine
/// tree paths of length 1..3 between consecutive vertices, each tree edge used
/// exactly twice.
[[nodiscard]] std::vector<std::string> check_certificate(const SpanningTree& t,
                                                         const Tour& tour,
                                                         const UsageCertificate& cert);

struct TreeCycleBound {
  Tour tour;
  PowerCost cycle_cost;
  PowerCost tree_cost;
  double log_bound = 0.0;  // ln((2/3) 3^k S_k(T))
  bool holds = true;
};

/// Runs tree_cube_cycle and checks S_k(H) <= (2/3) 3^k S_k(T).
[[nodiscard]] TreeCycleBound tree_to_cycle_cost_bound(const SpanningTree& t,
                                                      const PointSet& points, unsigned k);

struct SekaninaResult {
  Tour tour;
  PowerCost cost;
  BoundCheck bound;  // against 3 sqrt5 (2/3)^(1/k) sqrt k
};

/// MST followed by the cube-cycle traversal. n = 2 gives the doubled edge.
[[nodiscard]] SekaninaResult mst_sekanina_tour(const PointSet& points, unsigned k);

}  // namespace powertour
