#include "powertour/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "powertour/error.hpp"

namespace powertour {

HalfCubePairCheck lemma5_check(const Point& u, const Point& v, double tol) {
  if (u.size() != v.size() || u.empty()) throw InputError("lemma5_check needs equal dimensions");
  for (const Point* p : {&u, &v}) {
    for (double c : *p) {
      if (c < -0.5 - tol || c > 0.5 + tol) throw InputError("vector outside [-1/2,1/2]^k");
    }
  }
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    plus += (u[i] + v[i]) * (u[i] + v[i]);
    minus += (u[i] - v[i]) * (u[i] - v[i]);
  }
  HalfCubePairCheck r;
  r.lhs = std::sqrt(plus) / 2.0 + std::sqrt(minus) / 4.0;
  r.rhs = std::sqrt(5.0) / 4.0 * std::sqrt(static_cast<double>(u.size()));
  r.ok = r.lhs <= r.rhs + 1e-9;
  return r;
}

std::size_t hamming_min_distance(const PointSet& x) {
  if (x.size() < 2) throw InputError("minimum distance needs at least 2 points");
  if (!x.is_cube_vertex_set()) throw InputError("hamming distance needs points of {0,1}^k");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      std::size_t d = 0;
      for (std::size_t c = 0; c < x.dimension(); ++c) d += x[i][c] != x[j][c] ? 1 : 0;
      best = std::min(best, d);
    }
  }
  return best;
}

SingletonCheck singleton_check(std::size_t k, std::size_t d, std::size_t size) {
  if (d == 0 || d > k) throw InputError("minimum distance must lie in [1, k]");
  const double kd = static_cast<double>(k);
  const double dd = static_cast<double>(d);
  const double n = static_cast<double>(size);
  SingletonCheck r;
  r.singleton_bound = std::exp2(kd - dd + 1.0);
  r.singleton_ok = n <= r.singleton_bound;
  if (3.0 * dd < 2.0 * kd) {
    r.improved_bound = std::exp2(kd - 1.5 * dd + 2.0);
    r.improved_ok = n <= *r.improved_bound;
  }
  return r;
}

NearestNeighborCheck nearest_neighbor_sum_check(const PointSet& x, const Tour& t) {
  if (x.dimension() != 2) throw InputError("nearest-neighbour check is planar");
  if (x.size() < 2) throw InputError("nearest-neighbour check needs at least 2 points");
  NearestNeighborCheck r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) best = std::min(best, x.squared_distance(i, j));
    }
    r.sum += best;
  }
  for (const auto& e : t.edges) r.tour_cost += e.weight * e.weight;
  r.dominated_by_tour = r.sum <= r.tour_cost * (1.0 + 1e-9) + 1e-12;
  r.within_four = r.sum <= 4.0 * (1.0 + 1e-9);
  return r;
}

bool BoundReport::certified_pass() const {
  for (const auto& res : results) {
    for (const auto& c : res.checks) {
      if (c.certified && !c.pass) return false;
    }
  }
  return true;
}

namespace {

bool is_one_of(const std::string& name, std::initializer_list<const char*> names) {
  return std::any_of(names.begin(), names.end(), [&](const char* n) { return name == n; });
}

}  // namespace

BoundReport bound_report(const PointSet& points, unsigned k, std::vector<AlgorithmRun> runs,
                         std::string instance) {
  if (k < 2) throw InputError("bound_report needs k >= 2");
  BoundReport report;
  report.instance = std::move(instance);
  report.k = k;
  report.n = points.size();
  report.bounds = named_bounds(k);

  const double kd = static_cast<double>(k);
  const bool cube = (points.container() == Container::UnitCube ||
                     points.container() == Container::HalfCube) &&
                    points.dimension() == k;
  const bool cube_vertices = cube && points.container() == Container::UnitCube &&
                             points.is_cube_vertex_set();
  auto log_of = [&](double scaled) { return kd * std::log(scaled); };

  const AlgorithmRun* oracle = nullptr;
  for (const auto& r : runs) {
    if (r.algorithm == "oracle") oracle = &r;
  }

  for (auto& run : runs) {
    AlgorithmResult res{run, {}};
    const std::string& a = run.algorithm;
    const double achieved = run.cost.log_unscaled;
    const bool ball_packing_algo = is_one_of(a, {"mst-sekanina", "two-phase", "oracle"});

    res.checks.push_back(check_upper("mst_ball_packing", log_of(report.bounds.mst_ball_packing), k,
                                     achieved, ball_packing_algo && cube && k >= 3));
    res.checks.push_back(check_upper("bollobas_meir", log_of(report.bounds.bollobas_meir), k,
                                     achieved, ball_packing_algo && cube && k >= 3));
    res.checks.push_back(check_upper("greedy_fixed_n", log_greedy_fixed_n_bound(k, report.n), k,
                                     achieved, is_one_of(a, {"greedy", "oracle"}) && cube));
    if (k == 2) {
      res.checks.push_back(check_upper(
          "newman_square", std::log(4.0), k, achieved,
          is_one_of(a, {"newman2d", "oracle"}) && cube && points.container() == Container::UnitCube));
    }
    if (cube_vertices && k >= 29) {
      res.checks.push_back(check_upper("cube_vertex_cycle", log_cube_vertex_cycle_bound(k), k,
                                       achieved, is_one_of(a, {"greedy", "oracle"})));
    }
    res.checks.push_back(
        check_upper("conjectured_cycle", log_of(report.bounds.revised_cycle), k, achieved, false));
    if (oracle != nullptr && &run != oracle) {
      BoundCheck lower = check_upper("oracle_optimum", oracle->cost.log_unscaled, k, achieved, true);
      lower.upper = false;
      lower.pass = log_le(oracle->cost.log_unscaled, achieved);
      res.checks.push_back(std::move(lower));
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace powertour
