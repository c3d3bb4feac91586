#pragma once

#include <cstdint>
#include <random>

namespace powertour {

/// Identifier recorded in generated files so runs can be replicated.
inline constexpr const char* kRngAlgorithm = "mt19937_64/u53";

/// mt19937_64 with a fixed double conversion: the top 53 bits scaled by 2^-53.
/// std::uniform_real_distribution is implementation-defined, so it is not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

/// splitmix64 step, used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace powertour
