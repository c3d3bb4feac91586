#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "powertour/geometry.hpp"

namespace powertour {

/// Unscaled cost S_k = sum |e|^k and scaled cost s_k = S_k^(1/k) of an edge
/// multiset, accumulated in the log domain.
///
/// log_terms holds k*ln|e| for every edge of positive length, sorted
/// descending; the sum is a left-to-right logsumexp over that order, so the
/// result does not depend on the order edges were supplied in. Zero-length
/// edges are counted and contribute nothing.
struct PowerCost {
  unsigned exponent = 1;
  std::vector<double> log_terms;
  std::size_t zero_edges = 0;
  double log_unscaled = 0.0;  // ln S_k, -inf for an empty/zero sum
  double unscaled = 0.0;      // +inf when overflow is set
  bool overflow = false;
  double scaled = 0.0;

  [[nodiscard]] std::size_t edge_count() const { return log_terms.size() + zero_edges; }
};

[[nodiscard]] PowerCost power_cost(std::span<const Edge> edges, unsigned k);
[[nodiscard]] PowerCost power_cost_from_lengths(std::span<const double> lengths, unsigned k);

/// Stable ln(sum exp(x_i)); returns -inf for an empty input.
[[nodiscard]] double log_sum_exp(std::span<const double> values);

/// ln(exp(a) + exp(b)).
[[nodiscard]] double log_add(double a, double b);

/// log_a <= log_b with relative tolerance rel on the underlying values.
[[nodiscard]] bool log_le(double log_a, double log_b, double rel = 1e-9);

}  // namespace powertour
