#pragma once

// Slow reference implementations used as test oracles. They share nothing
// with the library beyond PointSet and Edge.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <tuple>
#include <vector>

#include "powertour/geometry.hpp"

namespace powertour::testing {

inline double direct_sum(const std::vector<double>& lengths, double k) {
  double s = 0.0;
  for (double w : lengths) s += std::pow(w, k);
  return s;
}

inline double direct_cost(const PointSet& x, const std::vector<std::size_t>& order, double k,
                          bool closed) {
  double s = 0.0;
  const std::size_t n = order.size();
  const std::size_t m = closed ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) s += std::pow(x.distance(order[i], order[(i + 1) % n]), k);
  return s;
}

/// Minimum closed tour cost over all (n-1)! orders starting at vertex 0.
inline double brute_min_tour(const PointSet& x, double k) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  if (x.size() == 2) return 2.0 * std::pow(x.distance(0, 1), k);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, direct_cost(x, order, k, true));
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

inline double brute_min_path(const PointSet& x, double k) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, direct_cost(x, order, k, false));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline double brute_min_matching_rec(const PointSet& x, double k, std::vector<bool>& used) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) return 0.0;
  used[first] = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    best = std::min(best, std::pow(x.distance(first, j), k) + brute_min_matching_rec(x, k, used));
    used[j] = false;
  }
  used[first] = false;
  return best;
}

inline double brute_min_matching(const PointSet& x, double k) {
  std::vector<bool> used(x.size(), false);
  return brute_min_matching_rec(x, k, used);
}

/// Minimum spanning-tree weight over every (n-1)-subset of the complete graph.
inline double brute_min_spanning_weight(const PointSet& x) {
  const std::size_t n = x.size();
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
  do {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    bool acyclic = true;
    double w = 0.0;
    for (std::size_t e = 0; e < all.size() && acyclic; ++e) {
      if (!pick[e]) continue;
      const auto a = find(all[e].first), b = find(all[e].second);
      if (a == b) acyclic = false;
      parent[a] = b;
      w += x.distance(all[e].first, all[e].second);
    }
    if (acyclic) best = std::min(best, w);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

struct ReplayEdge {
  std::size_t u;
  std::size_t v;
  double squared;
};

/// The greedy rule run literally: at every step scan all pairs of path ends on
/// different paths and take the smallest (|e|^2, min index, max index).
inline std::vector<ReplayEdge> greedy_replay(
    const PointSet& x, const std::vector<std::vector<std::size_t>>& initial_paths = {}) {
  const std::size_t n = x.size();
  std::vector<std::size_t> degree(n, 0), label(n);
  std::iota(label.begin(), label.end(), 0);
  auto relabel = [&](std::size_t from, std::size_t to) {
    for (auto& l : label)
      if (l == from) l = to;
  };
  std::size_t paths = n;
  for (const auto& p : initial_paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      ++degree[p[i]];
      ++degree[p[i + 1]];
      relabel(label[p[i + 1]], label[p[i]]);
      --paths;
    }
  }
  std::vector<ReplayEdge> trace;
  while (paths > 1) {
    ReplayEdge best{0, 0, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; ++i) {
      if (degree[i] >= 2) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (degree[j] >= 2 || label[i] == label[j]) continue;
        const double sq = x.squared_distance(i, j);
        if (std::tie(sq, i, j) < std::tie(best.squared, best.u, best.v)) best = {i, j, sq};
      }
    }
    ++degree[best.u];
    ++degree[best.v];
    relabel(label[best.v], label[best.u]);
    --paths;
    trace.push_back(best);
  }
  return trace;
}

inline bool rel_close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace powertour::testing
