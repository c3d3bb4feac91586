#include "powertour/newman.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "powertour/error.hpp"
#include "powertour/power_cost.hpp"

namespace powertour::planar {

namespace {

Vec2 sub(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
double cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
double sq(const Vec2& a, const Vec2& b) { return dot(sub(a, b), sub(a, b)); }

Vec2 foot_of_altitude(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Vec2 ab = sub(b, a);
  const double t = dot(sub(c, a), ab) / dot(ab, ab);
  return {a[0] + t * ab[0], a[1] + t * ab[1]};
}

constexpr std::size_t kMaxDepth = 4000;

// Coincident points share one representative; the rest ride along with it.
struct Groups {
  std::vector<std::size_t> reps;
  std::vector<std::vector<std::size_t>> members;  // indexed by representative
};

Groups group_coincident(const std::vector<Vec2>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return pts[i] < pts[j]; });
  Groups g;
  g.members.resize(pts.size());
  for (std::size_t pos = 0; pos < idx.size();) {
    std::size_t end = pos;
    std::vector<std::size_t> block;
    while (end < idx.size() && pts[idx[end]] == pts[idx[pos]]) block.push_back(idx[end++]);
    std::sort(block.begin(), block.end());
    g.reps.push_back(block.front());
    g.members[block.front()] = std::move(block);
    pos = end;
  }
  std::sort(g.reps.begin(), g.reps.end());
  return g;
}

std::vector<std::size_t> expand(const Groups& g, const std::vector<std::size_t>& seq) {
  std::vector<std::size_t> out;
  for (std::size_t r : seq) out.insert(out.end(), g.members[r].begin(), g.members[r].end());
  return out;
}

double path_cost(const std::vector<Vec2>& pts, const Vec2& start, const Vec2& end,
                 const std::vector<std::size_t>& seq) {
  if (seq.empty()) return sq(start, end);
  double c = sq(start, pts[seq.front()]) + sq(pts[seq.back()], end);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) c += sq(pts[seq[i]], pts[seq[i + 1]]);
  return c;
}

class Builder {
 public:
  Builder(const std::vector<Vec2>& pts, double scale_sq) : pts_(pts), slack_(1e-12 * scale_sq) {}

  // Extended path a -> ... -> b through `ids` inside the right triangle (a, b, right angle c).
  std::vector<std::size_t> right(const Vec2& a, const Vec2& b, const Vec2& c,
                                 const std::vector<std::size_t>& ids, std::size_t depth) const {
    const double limit = sq(a, b);
    if (ids.size() <= 1) {
      check_level(a, b, ids, limit);
      return ids;
    }
    if (depth > kMaxDepth || limit <= slack_ * 1e-6) {
      // Numerically indistinguishable points: any order costs O(limit).
      auto seq = ids;
      const Vec2 ab = sub(b, a);
      std::stable_sort(seq.begin(), seq.end(), [&](std::size_t i, std::size_t j) {
        return dot(sub(pts_[i], a), ab) < dot(sub(pts_[j], a), ab);
      });
      return seq;
    }
    const Vec2 h = foot_of_altitude(a, b, c);
    const Vec2 ch = sub(h, c);
    const double a_side = cross(ch, sub(a, c));
    std::vector<std::size_t> near_a, near_b;
    for (std::size_t i : ids) {
      const double s = cross(ch, sub(pts_[i], c));
      (s * a_side >= 0.0 ? near_a : near_b).push_back(i);
    }
    auto first = right(a, c, h, near_a, depth + 1);
    auto second = right(c, b, h, near_b, depth + 1);
    auto seq = splice(a, c, b, std::move(first), second);
    check_level(a, b, seq, limit);
    return seq;
  }

  // Concatenate start->first->pivot and pivot->second->end, then drop the pivot anchor.
  std::vector<std::size_t> splice(const Vec2& start, const Vec2& pivot, const Vec2& end,
                                  std::vector<std::size_t> first,
                                  const std::vector<std::size_t>& second) const {
    const Vec2 before = first.empty() ? start : pts_[first.back()];
    const Vec2 after = second.empty() ? end : pts_[second.front()];
    if (!shortcut_ok(before, pivot, after, 1e-9)) {
      throw InternalError("shortcut at an obtuse angle");
    }
    first.insert(first.end(), second.begin(), second.end());
    return first;
  }

  void check_level(const Vec2& a, const Vec2& b, const std::vector<std::size_t>& seq,
                   double limit) const {
    const double cost = path_cost(pts_, a, b, seq);
    if (cost > limit * (1.0 + 1e-9) + slack_) {
      throw InternalError("extended path exceeds its hypotenuse bound");
    }
  }

  const std::vector<Vec2>& points() const { return pts_; }

 private:
  const std::vector<Vec2>& pts_;
  double slack_;
};

std::vector<Vec2> to_vec2(const PointSet& x) {
  if (x.dimension() != 2) throw InputError("planar constructions need 2-dimensional points");
  std::vector<Vec2> out;
  out.reserve(x.size());
  for (const auto& p : x.points()) out.push_back({p[0], p[1]});
  return out;
}

// Signed distance of p from the directed line u->v (positive on the left).
double side(const Vec2& u, const Vec2& v, const Vec2& p) {
  return cross(sub(v, u), sub(p, u)) / std::sqrt(sq(u, v));
}

bool in_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c, double tol) {
  const double orient = cross(sub(b, a), sub(c, a)) >= 0.0 ? 1.0 : -1.0;
  return orient * side(a, b, p) >= -tol && orient * side(b, c, p) >= -tol &&
         orient * side(c, a, p) >= -tol;
}

void require_inside(const std::vector<Vec2>& pts, const Vec2& a, const Vec2& b, const Vec2& c,
                    double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!in_triangle(pts[i], a, b, c, tol)) {
      throw InputError("point " + std::to_string(i) + " lies outside the triangle");
    }
  }
}

ExtendedPath finish(const Vec2& start, const Vec2& end, const std::vector<Vec2>& pts,
                    std::vector<std::size_t> order) {
  ExtendedPath p;
  p.start = start;
  p.end = end;
  p.cost = path_cost(pts, start, end, order);
  p.order = std::move(order);
  return p;
}

double max_sq_side(const Vec2& a, const Vec2& b, const Vec2& c) {
  return std::max({sq(a, b), sq(b, c), sq(c, a), 1e-300});
}

}  // namespace

void RightTriangle::check(double tol) const {
  const double lhs = sq(a, c) + sq(b, c);
  const double rhs = sq(a, b);
  if (rhs <= 0.0 || std::fabs(lhs - rhs) > tol * rhs) {
    throw InputError("triangle is not right-angled at c");
  }
}

double RightTriangle::hypotenuse_sq() const { return sq(a, b); }

HamPath ExtendedPath::inner_path(const PointSet& x) const { return make_path(x, order); }

bool shortcut_ok(const Vec2& p, const Vec2& q, const Vec2& r, double tol) {
  const Vec2 qp = sub(p, q);
  const Vec2 qr = sub(r, q);
  return dot(qp, qr) >= -tol * std::sqrt(dot(qp, qp) * dot(qr, qr));
}

ExtendedPath right_triangle_path(const RightTriangle& tri, const PointSet& x, double tol) {
  tri.check();
  const auto pts = to_vec2(x);
  require_inside(pts, tri.a, tri.b, tri.c, tol * std::sqrt(tri.hypotenuse_sq()));
  const auto groups = group_coincident(pts);
  const Builder builder(pts, tri.hypotenuse_sq());
  auto seq = builder.right(tri.a, tri.b, tri.c, groups.reps, 0);
  return finish(tri.a, tri.b, pts, expand(groups, seq));
}

ExtendedPath non_obtuse_path(const Triangle& tri, const PointSet& x, double tol) {
  std::array<Vec2, 3> v{tri.p, tri.q, tri.r};
  const double scale = max_sq_side(v[0], v[1], v[2]);
  for (int i = 0; i < 3; ++i) {
    const Vec2& apex = v[i];
    const Vec2& u = v[(i + 1) % 3];
    const Vec2& w = v[(i + 2) % 3];
    if (dot(sub(u, apex), sub(w, apex)) < -tol * scale) throw InputError("triangle is obtuse");
  }
  if (std::fabs(cross(sub(v[1], v[0]), sub(v[2], v[0]))) <= 1e-15 * scale) {
    throw InputError("triangle is degenerate");
  }
  // c: the vertex opposite the longest side; a, b keep their input order.
  int apex = 0;
  double longest = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double s = sq(v[(i + 1) % 3], v[(i + 2) % 3]);
    if (s > longest) longest = s, apex = i;
  }
  const Vec2 c = v[apex];
  const Vec2 a = v[(apex + 1) % 3 < (apex + 2) % 3 ? (apex + 1) % 3 : (apex + 2) % 3];
  const Vec2 b = v[(apex + 1) % 3 < (apex + 2) % 3 ? (apex + 2) % 3 : (apex + 1) % 3];

  const auto pts = to_vec2(x);
  require_inside(pts, a, b, c, tol * std::sqrt(scale));
  const auto groups = group_coincident(pts);
  const Builder builder(pts, scale);
  const Vec2 h = foot_of_altitude(a, b, c);
  const Vec2 ch = sub(h, c);
  const double a_side = cross(ch, sub(a, c));
  std::vector<std::size_t> near_a, near_b;
  for (std::size_t i : groups.reps) {
    (cross(ch, sub(pts[i], c)) * a_side >= 0.0 ? near_a : near_b).push_back(i);
  }
  auto seq = builder.splice(a, c, b, builder.right(a, c, h, near_a, 0),
                            builder.right(c, b, h, near_b, 0));
  builder.check_level(a, b, seq, sq(a, c) + sq(c, b));
  return finish(a, b, pts, expand(groups, seq));
}

Tour non_obtuse_cycle(const Triangle& tri, const PointSet& x, double tol) {
  if (x.size() < 2) throw InputError("a tour needs at least 2 points");
  const auto path = non_obtuse_path(tri, x, tol);
  auto tour = close_path(path.inner_path(x), x);
  const double limit = sq(tri.p, tri.q) + sq(tri.q, tri.r) + sq(tri.r, tri.p);
  const double cost = power_cost(tour.edges, 2).unscaled;
  if (cost > limit * (1.0 + 1e-9)) throw InternalError("triangle cycle exceeds a^2 + b^2 + c^2");
  return tour;
}

ExtendedPath envelope_path(SquareSide which, const PointSet& x, double tol) {
  const Vec2 o{0.5, 0.5};
  Vec2 a{}, b{};
  switch (which) {
    case SquareSide::Bottom: a = {0, 0}, b = {1, 0}; break;
    case SquareSide::Right: a = {1, 0}, b = {1, 1}; break;
    case SquareSide::Top: a = {1, 1}, b = {0, 1}; break;
    case SquareSide::Left: a = {0, 1}, b = {0, 0}; break;
  }
  const Vec2 c{2 * o[0] - a[0], 2 * o[1] - a[1]};  // opposite a
  const Vec2 d{2 * o[0] - b[0], 2 * o[1] - b[1]};  // opposite b
  // V splits into (a, c, right angle d) and (c, b, right angle o) along the diagonal a-c.
  const auto pts = to_vec2(x);
  const auto groups = group_coincident(pts);
  const double d_side = side(a, c, d);
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool in_first = in_triangle(pts[i], a, c, d, tol);
    const bool in_second = in_triangle(pts[i], c, b, o, tol);
    if (!in_first && !in_second) {
      throw InputError("point " + std::to_string(i) + " lies outside the envelope region");
    }
  }
  for (std::size_t i : groups.reps) {
    const double s = side(a, c, pts[i]);
    (s * d_side >= 0.0 || std::fabs(s) <= tol ? upper : lower).push_back(i);
  }
  const Builder builder(pts, 2.0);
  auto seq = builder.splice(a, c, b, builder.right(a, c, d, upper, 0),
                            builder.right(c, b, o, lower, 0));
  builder.check_level(a, b, seq, 3.0);
  return finish(a, b, pts, expand(groups, seq));
}

Tour newman_square_tour(const PointSet& x, SquareDiagonal diagonal, double tol) {
  if (x.size() < 2) throw InputError("a tour needs at least 2 points");
  const auto pts = to_vec2(x);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (double c : pts[i]) {
      if (c < -tol || c > 1.0 + tol) {
        throw InputError("point " + std::to_string(i) + " lies outside the unit square");
      }
    }
  }
  Vec2 a, b, lower_c, upper_c;
  if (diagonal == SquareDiagonal::Main) {
    a = {0, 0}, b = {1, 1}, lower_c = {1, 0}, upper_c = {0, 1};
  } else {
    a = {1, 0}, b = {0, 1}, lower_c = {0, 0}, upper_c = {1, 1};
  }
  const auto groups = group_coincident(pts);
  const double lower_side = side(a, b, lower_c);
  std::vector<std::size_t> lower_ids, upper_ids;
  for (std::size_t i : groups.reps) {
    const double s = side(a, b, pts[i]);
    (s * lower_side >= 0.0 || std::fabs(s) <= tol ? lower_ids : upper_ids).push_back(i);
  }
  const Builder builder(pts, 2.0);
  const auto lower = builder.right(a, b, lower_c, lower_ids, 0);
  const auto upper = builder.right(b, a, upper_c, upper_ids, 0);

  // Closed walk a, lower..., b, upper..., (a). Shortcut b, then a.
  auto joined = builder.splice(a, b, a, lower, upper);
  if (joined.size() >= 2 &&
      !shortcut_ok(pts[joined.back()], a, pts[joined.front()], 1e-9)) {
    throw InternalError("shortcut at an obtuse angle");
  }
  auto tour = make_tour(x, expand(groups, joined));
  const double cost = power_cost(tour.edges, 2).unscaled;
  if (cost > 4.0 * (1.0 + 1e-9)) throw InternalError("square tour exceeds S_2 = 4");
  return tour;
}

}  // namespace powertour::planar
