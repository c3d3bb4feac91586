#include "powertour/bounds.hpp"

#include <cmath>

#include "powertour/error.hpp"
#include "powertour/power_cost.hpp"

namespace powertour {

NamedBounds named_bounds(unsigned k) {
  if (k < 2) throw InputError("named bounds need k >= 2");
  const double kd = static_cast<double>(k);
  const double root_k = std::sqrt(kd);
  const double two_thirds = std::pow(2.0 / 3.0, 1.0 / kd);
  NamedBounds b;
  b.k = k;
  b.conjectured_cycle = std::pow(2.0, 1.0 / kd) * root_k;
  b.bollobas_meir = 9.0 * two_thirds * root_k;
  b.mst_ball_packing = 3.0 * std::sqrt(5.0) * two_thirds * root_k;
  b.k3_lower = std::pow(2.0, 7.0 / 6.0);
  b.revised_cycle = k == 3 ? b.k3_lower : b.conjectured_cycle;
  if (k == 2) {
    b.revised_path = std::sqrt(3.0);
  } else if (k <= 6) {
    b.revised_path = std::pow(std::pow(2.0, kd - 1.0) - 1.0, 1.0 / kd) * std::sqrt(2.0);
  } else {
    b.revised_path = root_k;
  }
  return b;
}

double log_greedy_fixed_n_bound(unsigned k, std::size_t n) {
  const double kd = static_cast<double>(k);
  const double log_root = 0.5 * kd * std::log(kd);  // ln k^(k/2)
  double log_sum = std::log(2.0);
  if (n > 2) {
    log_sum = log_add(log_sum, std::log(static_cast<double>(n - 2)) +
                                   0.5 * kd * std::log(2.0 / 3.0));
  }
  return log_sum + log_root;
}

double log_cube_vertex_cycle_bound(unsigned k) {
  const double kd = static_cast<double>(k);
  return std::log(2.0) + 0.5 * kd * std::log(kd);
}

BoundCheck check_upper(std::string name, double log_bound, unsigned k,
                       double achieved_log_unscaled, bool certified, double rel_tol) {
  const double kd = static_cast<double>(k);
  BoundCheck c;
  c.name = std::move(name);
  c.log_bound = log_bound;
  c.bound = std::exp(log_bound / kd);
  c.achieved = std::isfinite(achieved_log_unscaled) ? std::exp(achieved_log_unscaled / kd) : 0.0;
  c.upper = true;
  c.certified = certified;
  c.pass = log_le(achieved_log_unscaled, log_bound, rel_tol);
  return c;
}

}  // namespace powertour
