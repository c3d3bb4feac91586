#include "powertour/greedy_path.hpp"

#include <cmath>

#include "pairs.hpp"
#include "powertour/error.hpp"

namespace powertour {

GreedyResult greedy_ham_path(const PointSet& points, const std::optional<PathSystem>& warm_start) {
  const std::size_t n = points.size();
  if (n < 2) throw InputError("greedy_ham_path needs at least 2 points");
  PathSystem system(n);
  if (warm_start) {
    if (warm_start->size() != n) throw InputError("warm start covers a different vertex count");
    auto problems = validate(*warm_start, points);
    if (!problems.empty()) throw InputError("invalid warm start: " + problems.front());
    system = *warm_start;
  }

  std::vector<bool> open(n);
  for (std::size_t v = 0; v < n; ++v) open[v] = system.is_endpoint(v);

  GreedyResult r;
  if (system.component_count() > 1) {
    for (const auto& p : detail::sorted_pairs(points, std::numeric_limits<double>::infinity(),
                                              open)) {
      if (!system.can_join(p.u, p.v)) continue;
      const Edge e{p.u, p.v, std::sqrt(p.sq)};
      system.join(e);
      r.trace.push_back(e);
      if (system.component_count() == 1) break;
    }
  }
  r.path = system.to_ham_path(points);
  return r;
}

std::size_t greedy_edge_count_by_length(const std::vector<Edge>& trace, double j) {
  std::size_t count = 0;
  for (const auto& e : trace) {
    if (e.weight * e.weight >= j - 1e-9 * std::max(1.0, j)) ++count;
  }
  return count;
}

EdgeClasses classify_edges(const std::vector<Edge>& edges, unsigned k) {
  const double kd = static_cast<double>(k);
  const double eps = 1e-9 * std::max(1.0, kd);
  EdgeClasses c;
  for (const auto& e : edges) {
    const double sq = e.weight * e.weight;
    if (sq <= kd / 5.0 + eps) {
      ++c.short_edges;
    } else if (sq <= 3.0 * kd / 5.0 + eps) {
      ++c.medium_edges;
    } else if (sq <= 2.0 * kd / 3.0 + eps) {
      ++c.long_edges;
    } else {
      ++c.very_long_edges;
    }
  }
  return c;
}

EdgeClasses classify_edges(const HamPath& path, unsigned k) {
  return classify_edges(path.edges, k);
}

}  // namespace powertour
