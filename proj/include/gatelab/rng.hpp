#pragma once

#include <cmath>
#include <cstdint>

#include "gatelab/core.hpp"

namespace gatelab {

// Deterministic cross-platform random source.
//
// Generator: xoshiro256++ (Blackman and Vigna), state seeded through
// SplitMix64. Stream splitting: stream(seed, index) seeds SplitMix64 with
// seed XOR ((index + 1) * 0x9E3779B97F4A7C15) and draws the four state
// words, so per-sample streams are independent of scheduling order.
// Gaussian variates come from the Box-Muller transform.
// All constants below are part of the reproducibility contract.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t s_;
};

class RngStream {
 public:
  // Direct seeding: the full state comes from SplitMix64(seed).
  explicit RngStream(std::uint64_t seed) { init(seed); }

  // Per-sample stream: independent of other indices under the same seed.
  RngStream(std::uint64_t seed, std::uint64_t index) {
    init(seed ^ ((index + 1) * kGolden));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; draws are paired internally.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // 1 - u keeps the argument of log strictly positive.
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform01()));
    const double t = 2.0 * kPi * uniform01();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  cplx normal_complex() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im);
  }

 private:
  void init(std::uint64_t x) {
    SplitMix64 sm(x);
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
      s_[i] = sm.next();
      all_zero = all_zero && s_[i] == 0;
    }
    if (all_zero) s_[0] = kGolden;
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4]{};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gatelab
