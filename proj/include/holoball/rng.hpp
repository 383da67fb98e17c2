#pragma once

#include <cstdint>
#include <stdexcept>

#include "holoball/types.hpp"

namespace holoball {

/// Counter-based deterministic RNG (splitmix64 core). Substreams are derived
/// from (seed, index) so sample i gets the same draws no matter how the loop
/// over samples is scheduled across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed);
    r.state_ = mix(r.state_ + 0x9e3779b97f4a7c15ull * (index + 1));
    return r;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1).
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * u01() - 1.0; }

  Complex in_unit_disc() {
    for (int tries = 0; tries < 1000; ++tries) {
      Complex c(symmetric(), symmetric());
      if (std::norm(c) < 1.0) return c;
    }
    throw std::runtime_error("Rng::in_unit_disc: rejection failed");
  }

  /// Uniform in the Euclidean ball of radius rmax in C^n (rejection from the cube).
  CPoint in_ball(int n, double rmax = 0.99) {
    for (int tries = 0; tries < 100000; ++tries) {
      CPoint z(n);
      for (int i = 0; i < n; ++i) z[i] = Complex(symmetric(), symmetric());
      const double q = z.squaredNorm();
      if (q < 1.0) return (z * rmax).eval();
    }
    throw std::runtime_error("Rng::in_ball: rejection failed");
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t state_;
};

}  // namespace holoball
