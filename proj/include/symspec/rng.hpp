#pragma once

#include <cstdint>

#include "symspec/gaussian.hpp"

namespace symspec {

/// SplitMix64: the deterministic generator behind every randomized sampling
/// routine in the library. Fixed seed -> fixed stream, on every platform.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  long next_in(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double next_sym() { return 2.0 * next_unit() - 1.0; }
};

/// Gaussian integer with real/imaginary parts in [-bound, bound].
inline GaussianRational random_gaussian_int(SplitMix64& rng, long bound) {
  return gauss(rng.next_in(-bound, bound), rng.next_in(-bound, bound));
}

/// Nonzero Gaussian-integer vector with entries bounded by `bound`.
inline GaussianVec random_gaussian_vec(SplitMix64& rng, int len, long bound) {
  while (true) {
    GaussianVec v;
    v.reserve(len);
    bool nonzero = false;
    for (int i = 0; i < len; ++i) {
      v.push_back(random_gaussian_int(rng, bound));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (nonzero) return v;
  }
}

}  // namespace symspec
