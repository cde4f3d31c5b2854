/// @file rng.hpp
/// @brief Seeded random number generator with a fixed bit-to-double mapping.
#pragma once

#include <cstdint>
#include <random>

namespace cov2d {

/// Wraps std::mt19937_64 with an explicit 53-bit mantissa mapping so that the
/// produced doubles are identical on every platform (std::uniform_real_distribution
/// is not required to be reproducible across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) { return eng_() % n; }

 private:
  std::mt19937_64 eng_;
};

/// FNV-1a 64-bit hash; used for deterministic perturbation directions and
/// config fingerprints.
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cov2d
