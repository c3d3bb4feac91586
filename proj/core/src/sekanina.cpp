#include "powertour/sekanina.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "powertour/error.hpp"
#include "powertour/mst.hpp"

namespace powertour {

namespace {

struct RootedTree {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> depth;
};

}  // namespace

CubeCycle tree_cube_cycle(const SpanningTree& t, const PointSet& points, std::size_t anchor) {
  if (t.size() < 3) throw InputError("tree_cube_cycle needs a tree with at least 3 vertices");
  if (!std::binary_search(t.vertices.begin(), t.vertices.end(), anchor)) {
    throw InputError("anchor " + std::to_string(anchor) + " is not a tree vertex");
  }
  const std::size_t n_points = points.size();
  auto adj = t.adjacency(n_points);
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  RootedTree rt{std::vector<std::size_t>(n_points, kNoVertex),
                std::vector<std::size_t>(n_points, kNoVertex),
                std::vector<std::size_t>(n_points, 0)};

  // Even depth: emit on entry. Odd depth: emit on exit.
  std::vector<std::size_t> order;
  order.reserve(t.size());
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, next neighbour slot)
  std::vector<bool> visited(n_points, false);
  stack.emplace_back(anchor, 0);
  visited[anchor] = true;
  order.push_back(anchor);
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (slot < adj[v].size()) {
      const auto [w, edge_id] = adj[v][slot++];
      if (visited[w]) continue;
      visited[w] = true;
      rt.parent[w] = v;
      rt.parent_edge[w] = edge_id;
      rt.depth[w] = rt.depth[v] + 1;
      if (rt.depth[w] % 2 == 0) order.push_back(w);
      stack.emplace_back(w, 0);
    } else {
      if (rt.depth[v] % 2 == 1) order.push_back(v);
      stack.pop_back();
    }
  }
  if (order.size() != t.size()) throw InputError("tree is not connected");

  CubeCycle out;
  out.certificate.usage.assign(t.edges.size(), 0);
  const std::size_t n = order.size();
  out.certificate.hop_paths.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = order[i];
    std::size_t b = order[(i + 1) % n];
    std::vector<std::size_t> from_a, from_b;
    while (a != b && from_a.size() + from_b.size() <= 3) {
      if (rt.depth[a] >= rt.depth[b]) {
        from_a.push_back(rt.parent_edge[a]);
        a = rt.parent[a];
      } else {
        from_b.push_back(rt.parent_edge[b]);
        b = rt.parent[b];
      }
    }
    if (a != b || from_a.size() + from_b.size() > 3) {
      throw InternalError("cube cycle hop " + std::to_string(order[i]) + "->" +
                          std::to_string(order[(i + 1) % n]) + " exceeds tree distance 3");
    }
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    for (std::size_t id : from_a) ++out.certificate.usage[id];
    out.certificate.hop_paths.push_back(std::move(from_a));
  }
  out.tour = make_tour(points, std::move(order));

  auto problems = check_certificate(t, out.tour, out.certificate);
  if (out.certificate.hop_paths.back().size() != 1) {
    problems.push_back("closing edge at the anchor is not a tree edge");
  }
  if (!problems.empty()) throw InternalError("cube cycle certificate failed: " + problems.front());
  return out;
}

CubeCycle tree_cube_cycle(const SpanningTree& t, const PointSet& points) {
  if (t.vertices.empty()) throw InputError("empty tree");
  return tree_cube_cycle(t, points, t.vertices.front());
}

std::vector<std::string> check_certificate(const SpanningTree& t, const Tour& tour,
                                           const UsageCertificate& cert) {
  std::vector<std::string> out;
  const std::size_t n = tour.order.size();
  if (n != t.size()) out.push_back("cycle length differs from tree size");
  {
    auto sorted = tour.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != t.vertices) out.push_back("cycle does not visit exactly the tree's vertices");
  }
  if (cert.hop_paths.size() != n) {
    out.push_back("certificate has " + std::to_string(cert.hop_paths.size()) +
                  " hop paths for " + std::to_string(n) + " cycle edges");
    return out;
  }
  std::vector<unsigned> usage(t.edges.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& hop = cert.hop_paths[i];
    if (hop.empty() || hop.size() > 3) {
      out.push_back("hop " + std::to_string(i) + " uses " + std::to_string(hop.size()) +
                    " tree edges");
      continue;
    }
    std::size_t at = tour.order[i];
    for (std::size_t id : hop) {
      if (id >= t.edges.size()) {
        out.push_back("hop " + std::to_string(i) + " names a missing tree edge");
        break;
      }
      const auto& e = t.edges[id];
      if (e.u == at) {
        at = e.v;
      } else if (e.v == at) {
        at = e.u;
      } else {
        out.push_back("hop " + std::to_string(i) + " is not a walk in the tree");
        break;
      }
      ++usage[id];
    }
    if (at != tour.order[(i + 1) % n]) {
      out.push_back("hop " + std::to_string(i) + " does not end at the next cycle vertex");
    }
  }
  if (usage != cert.usage) out.push_back("recorded usage counts differ from the hop paths");
  for (std::size_t id = 0; id < usage.size(); ++id) {
    if (usage[id] != 2) {
      out.push_back("tree edge " + std::to_string(id) + " used " + std::to_string(usage[id]) +
                    " times");
    }
  }
  return out;
}

TreeCycleBound tree_to_cycle_cost_bound(const SpanningTree& t, const PointSet& points,
                                        unsigned k) {
  auto cycle = tree_cube_cycle(t, points);
  TreeCycleBound r;
  r.cycle_cost = power_cost(cycle.tour.edges, k);
  r.tree_cost = power_cost(t.edges, k);
  r.log_bound = std::log(2.0 / 3.0) + static_cast<double>(k) * std::log(3.0) +
                r.tree_cost.log_unscaled;
  r.holds = log_le(r.cycle_cost.log_unscaled, r.log_bound);
  r.tour = std::move(cycle.tour);
  if (!r.holds) throw InternalError("cube cycle exceeds (2/3) 3^k S_k(T)");
  return r;
}

SekaninaResult mst_sekanina_tour(const PointSet& points, unsigned k) {
  if (points.size() < 2) throw InputError("a tour needs at least 2 points");
  SekaninaResult r;
  if (points.size() == 2) {
    r.tour = make_tour(points, {0, 1});
  } else {
    r.tour = tree_cube_cycle(build_mst(points), points, 0).tour;
  }
  r.cost = power_cost(r.tour.edges, k);
  const double kd = static_cast<double>(k);
  const double log_bound =
      kd * std::log(3.0 * std::sqrt(5.0) * std::pow(2.0 / 3.0, 1.0 / kd) * std::sqrt(kd));
  const bool cube = points.container() == Container::UnitCube ||
                    points.container() == Container::HalfCube;
  const bool certified = cube && k >= 3 && k == points.dimension();
  r.bound = check_upper("mst_ball_packing", log_bound, k, r.cost.log_unscaled, certified);
  return r;
}

}  // namespace powertour
