#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "powertour/geometry.hpp"

namespace powertour {

/// {0^k, 1^k}.
[[nodiscard]] PointSet diagonal_pair(std::size_t k);

/// The length-3 binary code {000, 011, 101, 110}; all pairwise distances sqrt2.
[[nodiscard]] PointSet k3_code4();

/// The eight even-weight vectors of {0,1}^4.
[[nodiscard]] PointSet k4_even_weight_code();

/// All even-weight vectors of {0,1}^k in lexicographic order (2^(k-1) points).
[[nodiscard]] PointSet even_weight_code(std::size_t k);

struct PlanarTightSets {
  PointSet corners;  // {0,1}^2
  PointSet pair;     // (0,0), (1,1)
  PointSet five;     // corners plus the centre
};

/// The three unit-square sets whose optimal tours reach S_2 = 4.
[[nodiscard]] PlanarTightSets figure1_sets();

/// u = (+1/2 x 4k/5, -1/2 x k/5), v = (+1/2 x k) in [-1/2,1/2]^k; they attain
/// |u+v|/2 + |u-v|/4 = (sqrt5/4) sqrt k. Requires k a positive multiple of 5.
[[nodiscard]] std::pair<Point, Point> lemma5_tight_vectors(std::size_t k);

[[nodiscard]] PointSet uniform_cube(std::size_t k, std::size_t n, std::uint64_t seed);

/// n distinct vertices of {0,1}^k. Throws InputError if n > 2^k.
[[nodiscard]] PointSet cube_vertex_subset(std::size_t k, std::size_t n, std::uint64_t seed);

/// cluster_count centres uniform in [0,1]^k, each point a centre plus a
/// uniform offset in [-radius, radius]^k, clamped to the cube.
[[nodiscard]] PointSet clustered(std::size_t k, std::size_t n, std::size_t cluster_count,
                                 double radius, std::uint64_t seed);

/// Uniform points of the half-cube [-1/2,1/2]^k.
[[nodiscard]] PointSet uniform_half_cube(std::size_t k, std::size_t n, std::uint64_t seed);

}  // namespace powertour
