#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "rmt/errors.hpp"

namespace rmt {

// Identifies one reproducible variate stream: a master seed plus the index
// of the replicate (or other independent unit of work) that owns it.  The
// variate sequence is a pure function of this pair, independent of worker
// count and scheduling.
struct SeededStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeededStream&, const SeededStream&) = default;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// Counter-seeded xoshiro256++ generator with the basic variate recipes the
// tridiagonal models need.  State is seeded by hashing (master_seed,
// stream_index) through splitmix64, so distinct stream indices give
// decorrelated streams and equal pairs give bitwise-equal sequences.
class RandomStream {
 public:
  explicit RandomStream(SeededStream s) {
    std::uint64_t h = s.master_seed;
    (void)detail::splitmix64(h);
    h ^= detail::rotl64(s.stream_index, 32) * 0xD6E8FEB86659FD93ULL;
    state_[0] = detail::splitmix64(h);
    state_[1] = detail::splitmix64(h);
    state_[2] = detail::splitmix64(h);
    state_[3] = detail::splitmix64(h);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1); both endpoints excluded, safe under log().
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  double exponential() { return -std::log(uniform_open()); }

  /// Centered Laplace with the given scale (scale 0 degenerates to 0).
  double laplace(double scale) {
    const double u = uniform_open();
    return u < 0.5 ? scale * std::log(2.0 * u) : -scale * std::log(2.0 * (1.0 - u));
  }

  // Unit-scale gamma by Marsaglia-Tsang squeeze/rejection.  Shapes below 1
  // go through the boosting identity G_a = G_{a+1} * U^{1/a}, so any
  // positive real shape is accepted.
  double gamma(double shape) {
    if (!(shape > 0.0)) throw DomainError("gamma variate: shape must be positive");
    if (shape < 1.0) return gamma(shape + 1.0) * std::pow(uniform_open(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // log of a unit-scale gamma draw, computed in log space so that tiny
  // shapes never underflow the boosting factor U^{1/a}.
  double log_gamma_variate(double shape) {
    if (!(shape > 0.0)) throw DomainError("gamma variate: shape must be positive");
    if (shape < 1.0) return log_gamma_variate(shape + 1.0) + std::log(uniform_open()) / shape;
    return std::log(gamma(shape));
  }

 private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace rmt
