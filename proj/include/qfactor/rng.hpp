#pragma once

#include <cstdint>

namespace qfactor {

/// splitmix64 stream. Used instead of <random> engines so that draws are
/// identical across standard libraries and thread schedules.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

/// Order-free combination of a master seed with stream indices.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  SplitMix64 s(master ^ (a * 0xA24BAED4963EE407ull) ^ (b * 0x9FB21C651E98DF25ull));
  return s.next();
}

}  // namespace qfactor
