#pragma once

#include <cmath>
#include <cstdint>

#include "levycredit/errors.hpp"

namespace levycredit {

// Deterministic variate stream identified by (base_seed, stream_index).
// The same pair reproduces the same sequence on any thread and with any
// worker count; distinct indices give statistically independent streams.
//
// Engine: xoshiro256++ (Blackman & Vigna), state filled by splitmix64 over
// the seed/index key. Distributions are sampled by the explicit algorithms
// below rather than std::*_distribution, so sequences do not depend on the
// standard library implementation.
class RngStream {
 public:
  RngStream(std::uint64_t base_seed, std::uint64_t stream_index)
      : base_seed_(base_seed), stream_index_(stream_index) {
    std::uint64_t state = base_seed;
    (void)splitmix64(state);  // decorrelate raw user seeds
    state ^= 0xd1b54a32d192ed03ull * (stream_index + 0x9e3779b97f4a7c15ull);
    for (auto& word : s_) word = splitmix64(state);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t base_seed() const noexcept { return base_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t next_u64() noexcept {
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

  // Uniform strictly inside (0, 1): 53-bit mantissa, half-ulp offset.
  double next_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unit-rate exponential.
  double next_exponential() noexcept { return -std::log(next_uniform()); }

  // Standard normal, Marsaglia polar method; the second coordinate is
  // cached, so normals come in deterministic pairs per stream.
  double next_normal() noexcept {
    if (has_cached_normal_) {
      has_cached_normal_ = false;
      return cached_normal_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_uniform() - 1.0;
      v = 2.0 * next_uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * m;
    has_cached_normal_ = true;
    return u * m;
  }

  // Gamma(shape, rate) by Marsaglia-Tsang, with the U^(1/shape) boost for
  // shape < 1. For the very small shapes that arise as subordinator
  // increments over short steps the boost factor may underflow to zero;
  // the lost mass sits below DBL_MIN and is negligible for path sums.
  double next_gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0))
      throw ParameterError("next_gamma: shape and rate must be > 0");
    double boost = 1.0;
    if (shape < 1.0) {
      boost = std::pow(next_uniform(), 1.0 / shape);
      shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    double x;
    for (;;) {
      double z, v;
      do {
        z = next_normal();
        v = 1.0 + c * z;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = next_uniform();
      if (u < 1.0 - 0.0331 * (z * z) * (z * z)) {
        x = d * v;
        break;
      }
      if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) {
        x = d * v;
        break;
      }
    }
    return boost * x / rate;
  }

  // Exact Poisson count via unit-rate arrivals; O(mean) draws, no
  // underflow for large means.
  long next_poisson(double mean) {
    if (!(mean >= 0.0)) throw ParameterError("next_poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    long n = 0;
    double t = next_exponential();
    while (t <= mean) {
      ++n;
      t += next_exponential();
    }
    return n;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t s_[4];
  std::uint64_t base_seed_;
  std::uint64_t stream_index_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace levycredit
