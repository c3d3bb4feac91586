#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "powertour/geometry.hpp"

namespace powertour {

inline constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns false if x and y were already joined.
  bool unite(std::size_t x, std::size_t y);
  [[nodiscard]] std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

/// Tree over a vertex subset of a point set (the full set for an MST, one
/// component for a threshold forest).
struct SpanningTree {
  std::vector<std::size_t> vertices;  // global point indices, ascending
  std::vector<Edge> edges;

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
  [[nodiscard]] double total_weight() const;
  /// Neighbor lists indexed by global point index (size = max index + 1);
  /// each entry is (neighbor, edge id).
  [[nodiscard]] std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(
      std::size_t n_points) const;
};

/// Closed visiting order; edges[i] joins order[i] and order[(i+1) % n].
struct Tour {
  std::vector<std::size_t> order;
  std::vector<Edge> edges;
};

/// Open visiting order with order.size() - 1 edges.
struct HamPath {
  std::vector<std::size_t> order;
  std::vector<Edge> edges;
};

struct Matching {
  std::vector<Edge> edges;
  [[nodiscard]] bool is_perfect(std::size_t n) const { return 2 * edges.size() == n; }
};

[[nodiscard]] Tour make_tour(const PointSet& points, std::vector<std::size_t> order);
[[nodiscard]] HamPath make_path(const PointSet& points, std::vector<std::size_t> order);

/// Appends the edge joining the two ends of p. n = 2 gives the doubled edge.
[[nodiscard]] Tour close_path(const HamPath& p, const PointSet& points);

/// Splits the alternate edges of an even tour into two perfect matchings,
/// cheaper (under exponent k) first.
[[nodiscard]] std::pair<Matching, Matching> cycle_to_matchings(const Tour& t, unsigned k);

/// Vertex-disjoint union of simple paths over vertices 0..n-1, with an
/// explicit endpoint registry per component.
class PathSystem {
 public:
  explicit PathSystem(std::size_t n);

  /// Builds a system from vertex-disjoint paths given as vertex sequences.
  /// Vertices not mentioned become singleton paths. Throws InputError if
  /// the sequences overlap or repeat a vertex.
  static PathSystem from_paths(const PointSet& points,
                               const std::vector<std::vector<std::size_t>>& paths);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t component_count() const { return components_; }
  [[nodiscard]] std::size_t degree(std::size_t v) const;
  [[nodiscard]] bool is_endpoint(std::size_t v) const { return degree(v) < 2; }
  [[nodiscard]] std::size_t component(std::size_t v) const;

  /// The other end of the path whose end is v (v itself for a singleton).
  [[nodiscard]] std::size_t opposite_end(std::size_t v) const;

  /// True iff adding uv keeps the system a disjoint union of paths.
  [[nodiscard]] bool can_join(std::size_t u, std::size_t v) const;

  /// Adds uv; throws InputError when can_join(u, v) is false.
  void join(const Edge& e);

  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  /// All vertices that are ends of some path (degree <= 1), ascending.
  [[nodiscard]] std::vector<std::size_t> endpoints() const;
  /// Each path as a vertex sequence, starting from its smaller end.
  [[nodiscard]] std::vector<std::vector<std::size_t>> paths() const;

  /// Requires component_count() == 1.
  [[nodiscard]] HamPath to_ham_path(const PointSet& points) const;

 private:
  std::size_t root(std::size_t v) const;

  std::size_t n_;
  std::size_t components_;
  std::vector<std::array<std::size_t, 2>> adj_;
  mutable std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> far_end_;  // for an endpoint: the other end of its path
  std::vector<Edge> edges_;
};

// Each returns an empty list iff the structure satisfies its invariants.
[[nodiscard]] std::vector<std::string> validate(const Tour& t, const PointSet& points);
[[nodiscard]] std::vector<std::string> validate(const HamPath& p, const PointSet& points);
[[nodiscard]] std::vector<std::string> validate(const SpanningTree& t, const PointSet& points);
[[nodiscard]] std::vector<std::string> validate(const Matching& m, const PointSet& points);
[[nodiscard]] std::vector<std::string> validate(const PathSystem& s, const PointSet& points);
/// Checks a raw edge list as a path system: degree <= 2, acyclic.
[[nodiscard]] std::vector<std::string> validate_path_edges(const std::vector<Edge>& edges,
                                                           const PointSet& points);
[[nodiscard]] std::vector<std::string> validate_edge(const Edge& e, const PointSet& points);

}  // namespace powertour
