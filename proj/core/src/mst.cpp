#include "powertour/mst.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "pairs.hpp"
#include "powertour/error.hpp"

namespace powertour {

namespace detail {

std::vector<PairEdge> sorted_pairs(const PointSet& points, double max_sq,
                                   const std::vector<bool>& only) {
  const std::size_t n = points.size();
  if (n > std::numeric_limits<std::uint32_t>::max()) throw SizeError("too many points");
  std::vector<PairEdge> pairs;
  if (std::isinf(max_sq) && only.empty()) pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (!only.empty() && !only[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!only.empty() && !only[j]) continue;
      const double sq = points.squared_distance(i, j);
      if (sq <= max_sq) {
        pairs.push_back({sq, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairEdge& a, const PairEdge& b) {
    if (a.sq != b.sq) return a.sq < b.sq;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return pairs;
}

}  // namespace detail

namespace {

std::vector<SpanningTree> kruskal_forest(const PointSet& points, double max_sq) {
  const std::size_t n = points.size();
  DisjointSets dsu(n);
  std::vector<Edge> accepted;
  for (const auto& p : detail::sorted_pairs(points, max_sq)) {
    if (dsu.components() == 1) break;
    if (dsu.unite(p.u, p.v)) accepted.push_back(Edge{p.u, p.v, std::sqrt(p.sq)});
  }
  std::map<std::size_t, std::size_t> tree_of_root;  // keyed by root, first seen = smallest vertex
  std::vector<SpanningTree> trees;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = dsu.find(v);
    auto [it, fresh] = tree_of_root.try_emplace(r, trees.size());
    if (fresh) trees.emplace_back();
    trees[it->second].vertices.push_back(v);
  }
  for (const auto& e : accepted) trees[tree_of_root[dsu.find(e.u)]].edges.push_back(e);
  return trees;
}

}  // namespace

// Dense Prim keyed on (sq, min, max); the strict order makes the tree equal to
// the Kruskal one, and edges are emitted in that same order.
SpanningTree build_mst(const PointSet& points) {
  const std::size_t n = points.size();
  using Key = std::tuple<double, std::size_t, std::size_t>;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Key> best(n, Key{inf, n, n});
  std::vector<bool> in_tree(n, false);
  std::vector<Key> chosen;
  chosen.reserve(n - 1);
  std::size_t v = 0;
  for (std::size_t step = 0; step < n; ++step) {
    in_tree[v] = true;
    if (step > 0) chosen.push_back(best[v]);
    std::size_t next = n;
    for (std::size_t w = 0; w < n; ++w) {
      if (in_tree[w]) continue;
      const Key key{points.squared_distance(v, w), std::min(v, w), std::max(v, w)};
      if (key < best[w]) best[w] = key;
      if (next == n || best[w] < best[next]) next = w;
    }
    v = next;
  }
  std::sort(chosen.begin(), chosen.end());
  SpanningTree t;
  for (std::size_t i = 0; i < n; ++i) t.vertices.push_back(i);
  for (const auto& [sq, a, b] : chosen) t.edges.push_back(Edge{a, b, std::sqrt(sq)});
  return t;
}

std::vector<SpanningTree> build_threshold_forest(const PointSet& points, double cutoff) {
  if (!(cutoff >= 0.0)) throw InputError("cutoff must be nonnegative");
  return kruskal_forest(points, cutoff * cutoff);
}

std::vector<std::pair<std::size_t, std::size_t>> mst_ball_packing_check(const SpanningTree& t,
                                                                        const PointSet& points,
                                                                        double abs_tol) {
  const std::size_t k = points.dimension();
  std::vector<Point> centres;
  centres.reserve(t.edges.size());
  for (const auto& e : t.edges) {
    Point c(k);
    for (std::size_t d = 0; d < k; ++d) c[d] = 0.5 * (points[e.u][d] + points[e.v][d]);
    centres.push_back(std::move(c));
  }
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (t.edges[i].weight == 0.0) continue;
    for (std::size_t j = i + 1; j < t.edges.size(); ++j) {
      if (t.edges[j].weight == 0.0) continue;
      const double radii = 0.25 * (t.edges[i].weight + t.edges[j].weight);
      const double gap = euclidean_distance(centres[i], centres[j]);
      if (gap < radii - abs_tol * std::max(1.0, radii)) violations.emplace_back(i, j);
    }
  }
  return violations;
}

}  // namespace powertour
