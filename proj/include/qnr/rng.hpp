#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qnr {

// Deterministic random source used everywhere randomness is needed.
//
// The core generator is std::mt19937_64, whose raw 64-bit output stream is
// fully specified by the C++ standard and therefore identical on every
// platform.  The standard *distributions* are not specified, so the derived
// draws below are implemented directly on the raw stream:
//
//   uniform_double : (x >> 11) * 2^-53, one raw draw, in [0, 1)
//   below(n)       : unbiased rejection sampling on the raw stream
//   normal         : Box-Muller, cosine branch only (two uniform draws each)
//
// Two Rng instances seeded identically produce identical draw sequences.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, 1, ..., n-1}; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal deviate.
  double normal() {
    double u1;
    do {
      u1 = uniform_double();
    } while (u1 <= 0.0);
    const double u2 = uniform_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 gen_;
};

// Seed for the i-th independent worker/replicate of a seeded run.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return base + index;
}

}  // namespace qnr
