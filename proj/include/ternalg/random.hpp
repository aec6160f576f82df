#pragma once

/// Portable seeded randomness.
///
/// The generator is xorshift64* (Vigna 2016): state update
///   x ^= x >> 12; x ^= x << 25; x ^= x >> 27
/// followed by multiplication with 0x2545F4914F6CDD1D. The user seed is
/// mixed through one round of splitmix64 (increment 0x9E3779B97F4A7C15) so
/// that seed 0 does not land on the all-zero fixed point. Uniform doubles use
/// the top 53 bits. Every value here is identical on every platform.

#include <cstdint>

#include "ternalg/hypermatrix.hpp"

namespace ternalg {

class Xorshift64Star {
public:
  using result_type = std::uint64_t;

  explicit Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Real and imaginary parts independently uniform on [-1, 1).
  Complex unit_complex() {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    return {re, im};
  }

private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::uint64_t state_;
};

/// Entries drawn in canonical order from a generator.
inline Hypermatrix random_hypermatrix(std::size_t dim, Xorshift64Star& rng) {
  return Hypermatrix::generate(dim, [&](std::size_t, std::size_t, std::size_t) {
    return rng.unit_complex();
  });
}

inline Hypermatrix random_hypermatrix(std::size_t dim, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  return random_hypermatrix(dim, rng);
}

} // namespace ternalg
