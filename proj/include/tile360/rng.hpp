#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace tile360 {

// Frozen, platform-independent random generator used by every seeded code
// path. The algorithm is part of the file-format contract: given the same
// seed, reimplementations must reproduce the exact stream.
//
//   state:   xoshiro256** (Blackman & Vigna), 4 x 64-bit words
//   seeding: four consecutive outputs of splitmix64 starting at `seed`
//   uniform: (next() >> 11) * 2^-53                  -> [0, 1)
//   normal:  Box-Muller, sqrt(-2 ln u1) * cos(2 pi u2), u1 strictly in (0, 1);
//            each normal() consumes exactly two uniforms, no caching
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Log-uniform over [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  double normal() {
    // (k + 0.5) * 2^-53 keeps u1 strictly inside (0, 1) so the log is finite.
    const double u1 =
        (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n), n >= 1. Simple multiply-shift; the modulo
  // bias at 64-bit range is irrelevant for test-instance generation.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4];
};

}  // namespace tile360
