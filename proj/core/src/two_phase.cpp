#include "powertour/two_phase.hpp"

#include <algorithm>
#include <cmath>

#include "powertour/error.hpp"
#include "powertour/greedy_path.hpp"
#include "powertour/mst.hpp"
#include "powertour/sekanina.hpp"

namespace powertour {

TwoPhaseResult two_phase_tour(const PointSet& points, unsigned k, std::optional<double> cutoff) {
  if (points.size() < 2) throw InputError("a tour needs at least 2 points");
  if (k == 0) throw InputError("exponent must be >= 1");
  TwoPhaseResult r;
  r.report.cutoff = cutoff.value_or(std::pow(static_cast<double>(k), -0.25));
  const auto forest = build_threshold_forest(points, r.report.cutoff);
  r.report.tree_count = forest.size();

  std::vector<Edge> forest_edges, cycle_edges;
  std::vector<std::vector<std::size_t>> paths;
  for (const auto& tree : forest) {
    r.report.largest_tree = std::max(r.report.largest_tree, tree.size());
    forest_edges.insert(forest_edges.end(), tree.edges.begin(), tree.edges.end());
    if (tree.size() < 3) {
      paths.push_back(tree.vertices);
      continue;
    }
    auto cycle = tree_cube_cycle(tree, points).tour;
    cycle_edges.insert(cycle_edges.end(), cycle.edges.begin(), cycle.edges.end());
    // Drop the longest cycle edge; the path runs from its far end around to its near end.
    std::size_t drop = 0;
    for (std::size_t i = 1; i < cycle.edges.size(); ++i) {
      if (cycle.edges[i].weight > cycle.edges[drop].weight) drop = i;
    }
    const std::size_t m = cycle.order.size();
    std::vector<std::size_t> path;
    path.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) path.push_back(cycle.order[(drop + i) % m]);
    paths.push_back(std::move(path));
  }

  auto initial = PathSystem::from_paths(points, paths);
  r.report.forest_cost = power_cost(forest_edges, k);
  r.report.cycles_cost = power_cost(cycle_edges, k);
  r.report.initial_paths = power_cost(initial.edges(), k);

  auto greedy = greedy_ham_path(points, initial);
  r.report.greedy_added = power_cost(greedy.trace, k);
  r.tour = close_path(greedy.path, points);
  r.report.tour_cost = power_cost(r.tour.edges, k);
  return r;
}

}  // namespace powertour
