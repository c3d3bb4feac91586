#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace powertour {

/// Closed-form extremal values for tours/paths in [0,1]^k, all in scaled form.
struct NamedBounds {
  unsigned k = 2;
  double conjectured_cycle = 0.0;  // 2^(1/k) sqrt(k), attained by a cube diagonal
  double bollobas_meir = 0.0;      // 9 (2/3)^(1/k) sqrt(k) = 3^(2-1/k) 2^(1/k) sqrt(k)
  double mst_ball_packing = 0.0;   // 3 sqrt(5) (2/3)^(1/k) sqrt(k)
  double k3_lower = 0.0;           // 2^(7/6), the 4-point code in [0,1]^3
  double revised_cycle = 0.0;      // 2^(7/6) for k = 3, 2^(1/k) sqrt(k) otherwise
  std::optional<double> revised_path;  // sqrt3 (k=2), (2^(k-1)-1)^(1/k) sqrt2 (k=3..6), sqrt(k) (k>=7)
};

[[nodiscard]] NamedBounds named_bounds(unsigned k);

/// Scaled bound for the closed greedy path on n points of [0,1]^k:
/// S_k <= (2 + (n-2) (2/3)^(k/2)) k^(k/2). Returned in log form of S_k.
[[nodiscard]] double log_greedy_fixed_n_bound(unsigned k, std::size_t n);

/// ln S_k of the cube-vertex cycle bound 2 k^(k/2).
[[nodiscard]] double log_cube_vertex_cycle_bound(unsigned k);

/// One comparison of an achieved scaled cost against a named bound.
struct BoundCheck {
  std::string name;
  double bound = 0.0;       // scaled value
  double log_bound = 0.0;   // ln of the unscaled value (k * ln bound)
  double achieved = 0.0;    // achieved scaled cost
  bool upper = true;        // false: the bound is a lower bound for this instance
  bool certified = false;   // a violation means an implementation bug
  bool pass = true;
};

/// Compares in the log domain so that k up to 1000 never overflows.
[[nodiscard]] BoundCheck check_upper(std::string name, double log_bound, unsigned k,
                                     double achieved_log_unscaled, bool certified,
                                     double rel_tol = 1e-9);

}  // namespace powertour
