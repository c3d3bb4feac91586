#include "powertour/power_cost.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "powertour/error.hpp"

namespace powertour {

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - top);
  return top + std::log(acc);
}

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

bool log_le(double log_a, double log_b, double rel) {
  if (log_a == -std::numeric_limits<double>::infinity()) return true;
  return log_a <= log_b + std::log1p(rel);
}

PowerCost power_cost_from_lengths(std::span<const double> lengths, unsigned k) {
  if (k == 0) throw InputError("power cost exponent must be >= 1");
  PowerCost c;
  c.exponent = k;
  c.log_terms.reserve(lengths.size());
  for (double len : lengths) {
    if (len < 0.0 || std::isnan(len)) throw InputError("edge length must be nonnegative");
    if (len == 0.0) {
      ++c.zero_edges;
    } else {
      c.log_terms.push_back(static_cast<double>(k) * std::log(len));
    }
  }
  std::sort(c.log_terms.begin(), c.log_terms.end(), std::greater<>());
  c.log_unscaled = log_sum_exp(c.log_terms);
  if (c.log_terms.empty()) {
    c.unscaled = 0.0;
    c.scaled = 0.0;
    return c;
  }
  c.scaled = std::exp(c.log_unscaled / static_cast<double>(k));
  if (c.log_unscaled > std::log(std::numeric_limits<double>::max())) {
    c.overflow = true;
    c.unscaled = std::numeric_limits<double>::infinity();
  } else {
    c.unscaled = std::exp(c.log_unscaled);
  }
  return c;
}

PowerCost power_cost(std::span<const Edge> edges, unsigned k) {
  std::vector<double> lengths;
  lengths.reserve(edges.size());
  for (const auto& e : edges) lengths.push_back(e.weight);
  return power_cost_from_lengths(lengths, k);
}

}  // namespace powertour
