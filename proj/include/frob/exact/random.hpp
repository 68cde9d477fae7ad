#pragma once

// Deterministic random source. The bounded draw is implemented here so the
// stream is identical across standard library implementations.

#include <cstdint>
#include <random>

#include "frob/exact/rational.hpp"

namespace frob {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Nonzero rational with numerator and denominator bounded by `height`.
  Rational nonzero_rational(std::int64_t height = 10000) {
    std::int64_t num = 0;
    while (num == 0) num = uniform(-height, height);
    Rational q(static_cast<long>(num), static_cast<unsigned long>(uniform(1, height)));
    q.canonicalize();
    return q;
  }

  Rational rational(std::int64_t height = 10000) {
    Rational q(static_cast<long>(uniform(-height, height)), static_cast<unsigned long>(uniform(1, height)));
    q.canonicalize();
    return q;
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 eng_;
};

/// Seed for trial `t` of a run seeded with `seed` (splitmix64).
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (t + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace frob
