#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"

namespace powertour::planar {

using Vec2 = std::array<double, 2>;

/// Right angle at c; hypotenuse ab.
struct RightTriangle {
  Vec2 a;
  Vec2 b;
  Vec2 c;

  /// Throws InputError if the angle at c is not right within tol.
  void check(double tol = 1e-9) const;
  [[nodiscard]] double hypotenuse_sq() const;
};

struct Triangle {
  Vec2 p;
  Vec2 q;
  Vec2 r;
};

/// Path from start to end through every point of X. The anchors are
/// container points, not members of X; cost includes the anchor edges.
struct ExtendedPath {
  Vec2 start;
  Vec2 end;
  std::vector<std::size_t> order;  // indices into X
  double cost = 0.0;               // sum of squared edge lengths

  /// The Hamiltonian path through X obtained by dropping both anchors.
  [[nodiscard]] HamPath inner_path(const PointSet& x) const;
};

/// True iff the angle at q is at most 90 degrees, i.e. |pr|^2 <= |pq|^2 + |qr|^2
/// is certified by the law of cosines. Degenerate (q == p or q == r) is true.
[[nodiscard]] bool shortcut_ok(const Vec2& p, const Vec2& q, const Vec2& r, double tol = 1e-12);

/// Extended path from tri.a to tri.b through X with sum |e|^2 <= |ab|^2,
/// built by splitting at the altitude foot and shortcutting the right-angle
/// vertex. Coincident points are threaded consecutively at zero cost.
/// Throws InputError if a point lies outside the triangle.
[[nodiscard]] ExtendedPath right_triangle_path(const RightTriangle& tri, const PointSet& x,
                                               double tol = 1e-9);

/// Extended path between the ends of the longest side with sum |e|^2 <= a^2 + b^2.
/// Throws InputError for an obtuse triangle or a point outside.
[[nodiscard]] ExtendedPath non_obtuse_path(const Triangle& tri, const PointSet& x,
                                           double tol = 1e-9);

/// Hamiltonian cycle with sum |e|^2 <= a^2 + b^2 + c^2; needs |X| >= 2.
[[nodiscard]] Tour non_obtuse_cycle(const Triangle& tri, const PointSet& x, double tol = 1e-9);

enum class SquareSide { Bottom, Right, Top, Left };

/// Points of the unit square [0,1]^2 minus the open triangle spanned by the
/// centre and `side`. Returns the extended path between the two corners of
/// `side`, with sum |e|^2 <= 3 including the anchor edges; inner_path() is
/// the Hamiltonian path. Throws InputError for points inside the excluded
/// triangle.
[[nodiscard]] ExtendedPath envelope_path(SquareSide side, const PointSet& x, double tol = 1e-9);

enum class SquareDiagonal { Main, Anti };

/// Tour through X in [0,1]^2 with sum |e|^2 <= 4: one extended path per half
/// of the square along the chosen diagonal, joined at the two diagonal corners,
/// which are then shortcut. Points on the diagonal go to the half holding the
/// right angle at (1,0) (main) or (0,0) (anti).
[[nodiscard]] Tour newman_square_tour(const PointSet& x,
                                      SquareDiagonal diagonal = SquareDiagonal::Main,
                                      double tol = 1e-9);

}  // namespace powertour::planar
