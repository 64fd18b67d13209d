#pragma once

#include <cstdint>
#include <limits>

namespace edgeflow {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Hash of a seed and up to three counters. Used to key independent
/// random streams (per edge, per replica, per worker) without any shared
/// generator state, so results do not depend on evaluation order.
constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0,
                                 std::uint64_t c = 0) noexcept {
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = mix64(seed + kGolden);
  h = mix64(h ^ (a + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ (b + 0x8cb92ba72f3d8dd7ULL));
  h = mix64(h ^ (c + 0xa0761d6478bd642fULL));
  return h;
}

/// Maps 64 random bits to a double in the open interval (0,1).
constexpr double unit_open(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Counter-based SplitMix64 stream. Satisfies UniformRandomBitGenerator, but
/// the distribution helpers below are preferred: they are implemented here by
/// inversion so that samples are identical across standard libraries.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit Stream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : state_(hash_key(seed, stream_id, 0x5eed)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  double uniform() noexcept { return unit_open((*this)()); }
  double exponential(double rate = 1.0) noexcept;
  /// Gamma(2,1): density w e^{-w}.
  double gamma2() noexcept { return exponential() + exponential(); }
  /// Geometric on {1,2,...} with success probability p in (0,1].
  std::uint64_t geometric(double p) noexcept;
  /// Standard Gumbel, CDF exp(-e^{-x}).
  double gumbel() noexcept;
  /// Standard logistic, CDF e^x/(1+e^x).
  double logistic() noexcept;
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace edgeflow
