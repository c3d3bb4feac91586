#include "powertour/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "powertour/error.hpp"

namespace powertour {

namespace {

constexpr double kTieRel = 1e-12;

// |e|^k / D^k with D the diameter, so sums stay finite for any k.
class ScaledWeights {
 public:
  ScaledWeights(const PointSet& points, unsigned k) : n_(points.size()), w_(n_ * n_, 0.0) {
    double diameter = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) diameter = std::max(diameter, points.distance(i, j));
    }
    if (diameter == 0.0) return;
    const double log_d = std::log(diameter);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double d = points.distance(i, j);
        const double w = d == 0.0 ? 0.0 : std::exp(static_cast<double>(k) * (std::log(d) - log_d));
        w_[i * n_ + j] = w_[j * n_ + i] = w;
      }
    }
  }
  double operator()(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> w_;
};

bool improves(double candidate, double best) { return candidate < best * (1.0 - kTieRel); }
bool hopeless(double partial, double best) { return partial >= best * (1.0 - kTieRel); }

class SequenceSearch {
 public:
  SequenceSearch(const ScaledWeights& w, std::size_t n, bool closed)
      : w_(w), n_(n), closed_(closed), used_(n, false) {}

  std::vector<std::size_t> run() {
    if (closed_) {
      current_.push_back(0);
      used_[0] = true;
      extend(0.0);
    } else {
      for (std::size_t s = 0; s < n_; ++s) {
        current_.assign(1, s);
        used_[s] = true;
        extend(0.0);
        used_[s] = false;
      }
    }
    return best_order_;
  }

 private:
  void extend(double partial) {
    if (hopeless(partial, best_) && !best_order_.empty()) return;
    if (current_.size() == n_) {
      double total = partial;
      if (closed_) {
        if (n_ > 2 && current_[1] > current_.back()) return;  // reversed duplicate
        total += w_(current_.back(), current_.front());
      } else if (n_ > 1 && current_.front() > current_.back()) {
        return;
      }
      if (best_order_.empty() || improves(total, best_)) {
        best_ = total;
        best_order_ = current_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      used_[v] = true;
      current_.push_back(v);
      extend(partial + w_(current_[current_.size() - 2], v));
      current_.pop_back();
      used_[v] = false;
    }
  }

  const ScaledWeights& w_;
  std::size_t n_;
  bool closed_;
  std::vector<bool> used_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_order_;
  double best_ = std::numeric_limits<double>::infinity();
};

void match(const ScaledWeights& w, std::vector<bool>& used, std::vector<std::pair<std::size_t, std::size_t>>& cur,
           double partial, double& best, std::vector<std::pair<std::size_t, std::size_t>>& best_pairs) {
  if (!best_pairs.empty() && hopeless(partial, best)) return;
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    if (best_pairs.empty() || improves(partial, best)) {
      best = partial;
      best_pairs = cur;
    }
    return;
  }
  used[first] = true;
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    cur.emplace_back(first, j);
    match(w, used, cur, partial + w(first, j), best, best_pairs);
    cur.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

}  // namespace

OracleTour exact_min_tour(const PointSet& points, unsigned k) {
  const std::size_t n = points.size();
  if (n < 2) throw InputError("a tour needs at least 2 points");
  if (n > kMaxOracleTour) {
    throw SizeError("exact_min_tour supports n <= " + std::to_string(kMaxOracleTour));
  }
  const ScaledWeights w(points, k);
  OracleTour r;
  r.tour = make_tour(points, SequenceSearch(w, n, true).run());
  r.cost = power_cost(r.tour.edges, k);
  return r;
}

OraclePath exact_min_path(const PointSet& points, unsigned k) {
  const std::size_t n = points.size();
  if (n > kMaxOracleTour) {
    throw SizeError("exact_min_path supports n <= " + std::to_string(kMaxOracleTour));
  }
  const ScaledWeights w(points, k);
  OraclePath r;
  r.path = make_path(points, SequenceSearch(w, n, false).run());
  r.cost = power_cost(r.path.edges, k);
  return r;
}

OracleMatching exact_min_matching(const PointSet& points, unsigned k) {
  const std::size_t n = points.size();
  if (n % 2 != 0) throw InputError("a perfect matching needs an even number of points");
  if (n > kMaxOracleMatching) {
    throw SizeError("exact_min_matching supports n <= " + std::to_string(kMaxOracleMatching));
  }
  const ScaledWeights w(points, k);
  std::vector<bool> used(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> cur, best_pairs;
  double best = std::numeric_limits<double>::infinity();
  match(w, used, cur, 0.0, best, best_pairs);
  OracleMatching r;
  for (auto [u, v] : best_pairs) r.matching.edges.push_back(make_edge(points, u, v));
  r.cost = power_cost(r.matching.edges, k);
  return r;
}

PairSumMax lemma7_max_pair_sum(std::size_t m) {
  if (m == 0) throw InputError("m must be >= 1");
  if (m > kMaxPairSumM) throw SizeError("lemma7_max_pair_sum supports m <= 14");
  PairSumMax best;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> q(m);
    for (std::size_t i = 0; i < m; ++i) q[i] = static_cast<int>((mask >> (m - 1 - i)) & 1u);
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const int d = q[i] - q[j];
        value += static_cast<std::uint64_t>(d * d);
      }
    }
    if (!have || value > best.value) {
      best.value = value;
      best.witness = std::move(q);
      have = true;
    }
  }
  return best;
}

ClosestPairCheck closest_pair_bound_check(const PointSet& x, std::size_t m) {
  return closest_pair_bound_check(x, m, BoxShape{1.0, 1.0, x.dimension(), 0});
}

ClosestPairCheck closest_pair_bound_check(const PointSet& x, std::size_t m, const BoxShape& box) {
  if (m < 2) throw InputError("m must be >= 2");
  if (x.size() < m) throw InputError("point set smaller than m");
  if (box.k1 + box.k2 != x.dimension()) throw InputError("box shape does not match dimension");
  ClosestPairCheck r;
  r.squared_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double d = x.squared_distance(i, j);
      if (d < r.squared_distance) r.squared_distance = d, r.p = i, r.q = j;
    }
  }
  const double md = static_cast<double>(m);
  const double coefficient = std::floor(md / 2) * std::ceil(md / 2) / (md * (md - 1) / 2);
  r.bound = coefficient * (box.delta * box.delta * static_cast<double>(box.k1) +
                           box.gamma * box.gamma * static_cast<double>(box.k2));
  r.ok = r.squared_distance <= r.bound * (1.0 + 1e-12);
  return r;
}

}  // namespace powertour
