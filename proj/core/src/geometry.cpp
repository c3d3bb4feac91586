#include "powertour/geometry.hpp"

#include <cmath>
#include <string>

#include "powertour/error.hpp"

namespace powertour {

bool Tolerance::le(double a, double b) const {
  return a <= b + std::max(abs, rel * std::max(std::fabs(a), std::fabs(b)));
}

bool Tolerance::eq(double a, double b) const { return le(a, b) && le(b, a); }

std::string_view to_string(Container c) {
  switch (c) {
    case Container::UnitCube: return "unit_cube";
    case Container::HalfCube: return "half_cube";
    case Container::PlanarTriangle: return "planar_triangle";
    case Container::PlanarRegion: return "planar_region";
    case Container::Unconstrained: return "unconstrained";
  }
  return "unconstrained";
}

Container container_from_string(std::string_view name) {
  if (name == "unit_cube") return Container::UnitCube;
  if (name == "half_cube") return Container::HalfCube;
  if (name == "planar_triangle") return Container::PlanarTriangle;
  if (name == "planar_region") return Container::PlanarRegion;
  if (name == "unconstrained") return Container::Unconstrained;
  throw InputError("unknown container '" + std::string(name) + "'");
}

PointSet::PointSet(std::size_t dimension, std::vector<Point> points, Container container,
                   double containment_tol)
    : dim_(dimension), points_(std::move(points)), container_(container) {
  if (dim_ == 0) throw InputError("point set dimension must be positive");
  if (points_.empty()) throw InputError("point set must contain at least one point");
  const bool planar =
      container_ == Container::PlanarTriangle || container_ == Container::PlanarRegion;
  if (planar && dim_ != 2) throw InputError("planar containers require dimension 2");
  double lo = 0.0, hi = 1.0;
  if (container_ == Container::HalfCube) lo = -0.5, hi = 0.5;
  const bool cube = container_ == Container::UnitCube || container_ == Container::HalfCube;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.size() != dim_) {
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(p.size()) + ", expected " + std::to_string(dim_));
    }
    for (double c : p) {
      if (!std::isfinite(c)) throw InputError("point " + std::to_string(i) + " is not finite");
      if (cube && (c < lo - containment_tol || c > hi + containment_tol)) {
        throw InputError("point " + std::to_string(i) + " lies outside the " +
                         std::string(to_string(container_)));
      }
    }
  }
}

double PointSet::distance(std::size_t i, std::size_t j) const {
  return std::sqrt(squared_distance(i, j));
}

double PointSet::squared_distance(std::size_t i, std::size_t j) const {
  return powertour::squared_distance(points_[i], points_[j]);
}

bool PointSet::is_cube_vertex_set() const {
  for (const auto& p : points_) {
    for (double c : p) {
      if (c != 0.0 && c != 1.0) return false;
    }
  }
  return true;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

Edge make_edge(const PointSet& points, std::size_t u, std::size_t v) {
  if (u >= points.size() || v >= points.size()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  return Edge{u, v, points.distance(u, v)};
}

}  // namespace powertour
