#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace powertour {

/// Comparison tolerances shared by every checker in the library.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  /// a <= b up to tolerance.
  [[nodiscard]] bool le(double a, double b) const;
  [[nodiscard]] bool eq(double a, double b) const;
};

inline constexpr Tolerance kDefaultTolerance{};

using Point = std::vector<double>;

enum class Container {
  UnitCube,      // [0,1]^k
  HalfCube,      // [-1/2,1/2]^k
  PlanarTriangle,
  PlanarRegion,
  Unconstrained,
};

[[nodiscard]] std::string_view to_string(Container c);
[[nodiscard]] Container container_from_string(std::string_view name);

/// An ordered, non-empty list of points sharing one dimension.
///
/// Cube membership is validated on construction only for the cube
/// containers; the planar containers carry no shape here, the algorithms
/// that use them check containment against their own triangle/region.
class PointSet {
 public:
  PointSet(std::size_t dimension, std::vector<Point> points,
           Container container = Container::UnitCube,
           double containment_tol = 1e-12);

  [[nodiscard]] std::size_t dimension() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] Container container() const { return container_; }
  [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] const std::vector<Point>& points() const { return points_; }

  [[nodiscard]] double distance(std::size_t i, std::size_t j) const;
  [[nodiscard]] double squared_distance(std::size_t i, std::size_t j) const;

  /// True when every coordinate is exactly 0 or 1.
  [[nodiscard]] bool is_cube_vertex_set() const;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  Container container_;
};

/// Undirected edge between two point indices, weighted by Euclidean length.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

[[nodiscard]] Edge make_edge(const PointSet& points, std::size_t u, std::size_t v);

[[nodiscard]] double euclidean_distance(std::span<const double> a, std::span<const double> b);
[[nodiscard]] double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace powertour
