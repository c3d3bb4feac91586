#include "powertour/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "powertour/error.hpp"
#include "powertour/power_cost.hpp"

namespace powertour {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --components_;
  return true;
}

double SpanningTree::total_weight() const {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> SpanningTree::adjacency(
    std::size_t n_points) const {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n_points);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    adj[edges[id].u].emplace_back(edges[id].v, id);
    adj[edges[id].v].emplace_back(edges[id].u, id);
  }
  return adj;
}

namespace {

std::vector<Edge> consecutive_edges(const PointSet& points, const std::vector<std::size_t>& order,
                                    bool closed) {
  std::vector<Edge> edges;
  if (order.size() < 2) return edges;
  edges.reserve(order.size());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    edges.push_back(make_edge(points, order[i], order[i + 1]));
  }
  if (closed) edges.push_back(make_edge(points, order.back(), order.front()));
  return edges;
}

void check_permutation(const std::vector<std::size_t>& order, std::size_t n,
                       std::vector<std::string>& out) {
  if (order.size() != n) {
    out.push_back("order has " + std::to_string(order.size()) + " entries, expected " +
                  std::to_string(n));
  }
  std::vector<unsigned> seen(n, 0);
  for (std::size_t v : order) {
    if (v >= n) {
      out.push_back("order not a permutation: vertex " + std::to_string(v) + " out of range");
      continue;
    }
    if (++seen[v] == 2) {
      out.push_back("order not a permutation: vertex " + std::to_string(v) + " twice");
    }
  }
}

void check_edge_sequence(const std::vector<Edge>& edges, const std::vector<std::size_t>& order,
                         bool closed, const PointSet& points, std::vector<std::string>& out) {
  const std::size_t n = order.size();
  const std::size_t expected = n < 2 ? 0 : (closed ? n : n - 1);
  if (edges.size() != expected) {
    out.push_back("edge count " + std::to_string(edges.size()) + ", expected " +
                  std::to_string(expected));
    return;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t a = order[i];
    const std::size_t b = order[(i + 1) % n];
    const auto& e = edges[i];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      out.push_back("edge " + std::to_string(i) + " does not join consecutive vertices " +
                    std::to_string(a) + " and " + std::to_string(b));
      continue;
    }
    for (auto& msg : validate_edge(e, points)) out.push_back(std::move(msg));
  }
}

}  // namespace

Tour make_tour(const PointSet& points, std::vector<std::size_t> order) {
  Tour t;
  t.edges = consecutive_edges(points, order, true);
  t.order = std::move(order);
  return t;
}

HamPath make_path(const PointSet& points, std::vector<std::size_t> order) {
  HamPath p;
  p.edges = consecutive_edges(points, order, false);
  p.order = std::move(order);
  return p;
}

Tour close_path(const HamPath& p, const PointSet& points) {
  if (p.order.size() < 2) throw InputError("a tour needs at least 2 points");
  Tour t;
  t.order = p.order;
  t.edges = p.edges;
  t.edges.push_back(make_edge(points, p.order.back(), p.order.front()));
  return t;
}

std::pair<Matching, Matching> cycle_to_matchings(const Tour& t, unsigned k) {
  const std::size_t n = t.order.size();
  if (n < 2 || n % 2 != 0) throw InputError("cycle_to_matchings needs an even tour, n >= 2");
  if (t.edges.size() != n) throw InputError("tour edge list does not match its order");
  Matching even, odd;
  for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? even : odd).edges.push_back(t.edges[i]);
  const double ce = power_cost(even.edges, k).log_unscaled;
  const double co = power_cost(odd.edges, k).log_unscaled;
  if (co < ce) return {std::move(odd), std::move(even)};
  return {std::move(even), std::move(odd)};
}

// --- PathSystem ------------------------------------------------------------

PathSystem::PathSystem(std::size_t n)
    : n_(n), components_(n), adj_(n, {kNoVertex, kNoVertex}), parent_(n), rank_(n, 0),
      far_end_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  std::iota(far_end_.begin(), far_end_.end(), std::size_t{0});
}

PathSystem PathSystem::from_paths(const PointSet& points,
                                  const std::vector<std::vector<std::size_t>>& paths) {
  PathSystem s(points.size());
  std::vector<bool> seen(points.size(), false);
  for (const auto& path : paths) {
    for (std::size_t v : path) {
      if (v >= points.size()) throw InputError("path vertex out of range");
      if (seen[v]) throw InputError("vertex " + std::to_string(v) + " appears in two paths");
      seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      s.join(make_edge(points, path[i], path[i + 1]));
    }
  }
  return s;
}

std::size_t PathSystem::root(std::size_t v) const {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

std::size_t PathSystem::degree(std::size_t v) const {
  return (adj_[v][0] != kNoVertex ? 1 : 0) + (adj_[v][1] != kNoVertex ? 1 : 0);
}

std::size_t PathSystem::component(std::size_t v) const { return root(v); }

std::size_t PathSystem::opposite_end(std::size_t v) const {
  if (degree(v) == 2) throw InputError("vertex " + std::to_string(v) + " is not a path end");
  return far_end_[v];
}

bool PathSystem::can_join(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  if (degree(u) >= 2 || degree(v) >= 2) return false;
  return root(u) != root(v);
}

void PathSystem::join(const Edge& e) {
  if (!can_join(e.u, e.v)) {
    throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                     " would break the path system");
  }
  const std::size_t a = far_end_[e.u];
  const std::size_t b = far_end_[e.v];
  adj_[e.u][adj_[e.u][0] == kNoVertex ? 0 : 1] = e.v;
  adj_[e.v][adj_[e.v][0] == kNoVertex ? 0 : 1] = e.u;
  far_end_[a] = b;
  far_end_[b] = a;
  std::size_t ru = root(e.u), rv = root(e.v);
  if (rank_[ru] < rank_[rv]) std::swap(ru, rv);
  parent_[rv] = ru;
  if (rank_[ru] == rank_[rv]) ++rank_[ru];
  --components_;
  edges_.push_back(e);
}

std::vector<std::size_t> PathSystem::endpoints() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (degree(v) < 2) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<std::size_t>> PathSystem::paths() const {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (degree(v) >= 2 || far_end_[v] < v) continue;
    std::vector<std::size_t> path{v};
    std::size_t prev = kNoVertex, cur = v;
    while (true) {
      std::size_t next = adj_[cur][0] != prev ? adj_[cur][0] : adj_[cur][1];
      if (next == kNoVertex) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(path));
  }
  return out;
}

HamPath PathSystem::to_ham_path(const PointSet& points) const {
  if (components_ != 1) {
    throw InputError("path system has " + std::to_string(components_) + " components, not 1");
  }
  auto all = paths();
  return make_path(points, std::move(all.front()));
}

// --- validation -----------------------------------------------------------

std::vector<std::string> validate_edge(const Edge& e, const PointSet& points) {
  std::vector<std::string> out;
  if (e.u >= points.size() || e.v >= points.size()) {
    out.push_back("edge endpoint out of range");
    return out;
  }
  if (e.u == e.v) out.push_back("self-loop at vertex " + std::to_string(e.u));
  const double expected = points.distance(e.u, e.v);
  if (std::fabs(e.weight - expected) > 1e-12 * std::max(1.0, expected)) {
    out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " weight differs from its Euclidean length");
  }
  return out;
}

std::vector<std::string> validate(const Tour& t, const PointSet& points) {
  std::vector<std::string> out;
  check_permutation(t.order, points.size(), out);
  if (t.order.size() < 2) {
    out.push_back("a tour needs at least 2 vertices");
    return out;
  }
  if (out.empty()) check_edge_sequence(t.edges, t.order, true, points, out);
  return out;
}

std::vector<std::string> validate(const HamPath& p, const PointSet& points) {
  std::vector<std::string> out;
  check_permutation(p.order, points.size(), out);
  if (out.empty()) check_edge_sequence(p.edges, p.order, false, points, out);
  return out;
}

std::vector<std::string> validate(const SpanningTree& t, const PointSet& points) {
  std::vector<std::string> out;
  if (t.vertices.empty()) {
    out.push_back("tree has no vertices");
    return out;
  }
  if (t.edges.size() + 1 != t.vertices.size()) {
    out.push_back("tree has " + std::to_string(t.edges.size()) + " edges for " +
                  std::to_string(t.vertices.size()) + " vertices");
  }
  std::vector<bool> member(points.size(), false);
  for (std::size_t v : t.vertices) {
    if (v >= points.size()) {
      out.push_back("tree vertex " + std::to_string(v) + " out of range");
      return out;
    }
    member[v] = true;
  }
  DisjointSets dsu(points.size());
  for (const auto& e : t.edges) {
    for (auto& msg : validate_edge(e, points)) out.push_back(std::move(msg));
    if (e.u >= points.size() || e.v >= points.size()) continue;
    if (!member[e.u] || !member[e.v]) {
      out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " leaves the tree's vertex set");
    }
    if (!dsu.unite(e.u, e.v)) {
      out.push_back("cycle through edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  const std::size_t r = dsu.find(t.vertices.front());
  for (std::size_t v : t.vertices) {
    if (dsu.find(v) != r) {
      out.push_back("tree not connected: vertex " + std::to_string(v));
      break;
    }
  }
  return out;
}

std::vector<std::string> validate(const Matching& m, const PointSet& points) {
  std::vector<std::string> out;
  std::vector<bool> used(points.size(), false);
  for (const auto& e : m.edges) {
    for (auto& msg : validate_edge(e, points)) out.push_back(std::move(msg));
    for (std::size_t v : {e.u, e.v}) {
      if (v >= points.size()) continue;
      if (used[v]) out.push_back("vertex " + std::to_string(v) + " matched twice");
      used[v] = true;
    }
  }
  return out;
}

std::vector<std::string> validate_path_edges(const std::vector<Edge>& edges,
                                             const PointSet& points) {
  std::vector<std::string> out;
  std::vector<unsigned> deg(points.size(), 0);
  DisjointSets dsu(points.size());
  for (const auto& e : edges) {
    for (auto& msg : validate_edge(e, points)) out.push_back(std::move(msg));
    if (e.u >= points.size() || e.v >= points.size()) continue;
    for (std::size_t v : {e.u, e.v}) {
      if (++deg[v] == 3) out.push_back("degree > 2 at vertex " + std::to_string(v));
    }
    if (!dsu.unite(e.u, e.v)) {
      out.push_back("cycle through edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  return out;
}

std::vector<std::string> validate(const PathSystem& s, const PointSet& points) {
  auto out = validate_path_edges(s.edges(), points);
  if (s.size() != points.size()) out.push_back("path system size differs from point count");
  if (s.component_count() + s.edges().size() != s.size()) {
    out.push_back("component count inconsistent with edge count");
  }
  for (std::size_t v : s.endpoints()) {
    const std::size_t w = s.opposite_end(v);
    if (s.degree(w) >= 2 || s.opposite_end(w) != v || s.component(w) != s.component(v)) {
      out.push_back("endpoint registry inconsistent at vertex " + std::to_string(v));
    }
  }
  return out;
}

}  // namespace powertour
