#include "powertour/constructions.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "powertour/error.hpp"
#include "powertour/random.hpp"

namespace powertour {

PointSet diagonal_pair(std::size_t k) {
  if (k == 0) throw InputError("dimension must be positive");
  return PointSet(k, {Point(k, 0.0), Point(k, 1.0)});
}

PointSet even_weight_code(std::size_t k) {
  if (k == 0 || k > 24) throw InputError("even_weight_code supports 1 <= k <= 24");
  std::vector<Point> pts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (__builtin_popcountll(mask) % 2 != 0) continue;
    Point p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<double>((mask >> (k - 1 - i)) & 1u);
    pts.push_back(std::move(p));
  }
  return PointSet(k, std::move(pts));
}

PointSet k3_code4() { return even_weight_code(3); }

PointSet k4_even_weight_code() { return even_weight_code(4); }

PlanarTightSets figure1_sets() {
  std::vector<Point> corners{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto five = corners;
  five.push_back({0.5, 0.5});
  return PlanarTightSets{PointSet(2, std::move(corners)), PointSet(2, {{0, 0}, {1, 1}}),
                     PointSet(2, std::move(five))};
}

std::pair<Point, Point> lemma5_tight_vectors(std::size_t k) {
  if (k == 0 || k % 5 != 0) throw InputError("lemma5_tight_vectors needs k a multiple of 5");
  Point u(k, 0.5), v(k, 0.5);
  for (std::size_t i = 4 * k / 5; i < k; ++i) u[i] = -0.5;
  return {std::move(u), std::move(v)};
}

PointSet uniform_cube(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k == 0 || n == 0) throw InputError("uniform_cube needs k >= 1 and n >= 1");
  Rng rng(seed);
  std::vector<Point> pts(n, Point(k));
  for (auto& p : pts) {
    for (auto& c : p) c = rng.uniform();
  }
  return PointSet(k, std::move(pts));
}

PointSet uniform_half_cube(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k == 0 || n == 0) throw InputError("uniform_half_cube needs k >= 1 and n >= 1");
  Rng rng(seed);
  std::vector<Point> pts(n, Point(k));
  for (auto& p : pts) {
    for (auto& c : p) c = rng.uniform() - 0.5;
  }
  return PointSet(k, std::move(pts), Container::HalfCube);
}

PointSet cube_vertex_subset(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k == 0 || n == 0) throw InputError("cube_vertex_subset needs k >= 1 and n >= 1");
  if (k < 63 && n > (std::uint64_t{1} << k)) {
    throw InputError("cannot pick " + std::to_string(n) + " distinct vertices of {0,1}^" +
                     std::to_string(k));
  }
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  if (k <= 20 && 2 * n > (std::size_t{1} << k)) {
    // Dense request: partial Fisher-Yates over all 2^k vertices.
    std::vector<std::uint64_t> all(std::size_t{1} << k);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
      Point p(k);
      for (std::size_t b = 0; b < k; ++b) p[b] = static_cast<double>((all[i] >> b) & 1u);
      pts.push_back(std::move(p));
    }
    return PointSet(k, std::move(pts));
  }
  std::unordered_set<std::string> seen;
  while (pts.size() < n) {
    std::string key(k, '0');
    for (std::size_t b = 0; b < k; ++b) key[b] = (rng.next() >> 63) ? '1' : '0';
    if (!seen.insert(key).second) continue;
    Point p(k);
    for (std::size_t b = 0; b < k; ++b) p[b] = key[b] == '1' ? 1.0 : 0.0;
    pts.push_back(std::move(p));
  }
  return PointSet(k, std::move(pts));
}

PointSet clustered(std::size_t k, std::size_t n, std::size_t cluster_count, double radius,
                   std::uint64_t seed) {
  if (k == 0 || n == 0 || cluster_count == 0) {
    throw InputError("clustered needs k, n, cluster_count >= 1");
  }
  if (!(radius >= 0.0)) throw InputError("cluster radius must be nonnegative");
  Rng rng(seed);
  std::vector<Point> centres(cluster_count, Point(k));
  for (auto& c : centres) {
    for (auto& x : c) x = rng.uniform();
  }
  std::vector<Point> pts(n, Point(k));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& centre = centres[i % cluster_count];
    for (std::size_t d = 0; d < k; ++d) {
      pts[i][d] = std::clamp(centre[d] + rng.uniform(-radius, radius), 0.0, 1.0);
    }
  }
  return PointSet(k, std::move(pts));
}

}  // namespace powertour
