#include "edgeflow/rng.hpp"

#include <cmath>

namespace edgeflow {

namespace {
__extension__ using u128 = unsigned __int128;
}

double Stream::exponential(double rate) noexcept {
  return -std::log(uniform()) / rate;
}

std::uint64_t Stream::geometric(double p) noexcept {
  if (p >= 1.0) return 1;
  // P(G > k) = (1-p)^k
  const double g = std::floor(std::log(uniform()) / std::log1p(-p));
  if (!(g < 9.0e18)) return std::numeric_limits<std::uint64_t>::max();
  return 1 + static_cast<std::uint64_t>(g);
}

double Stream::gumbel() noexcept { return -std::log(exponential()); }

double Stream::logistic() noexcept {
  const double u = uniform();
  return std::log(u) - std::log1p(-u);
}

std::uint64_t Stream::below(std::uint64_t bound) noexcept {
  // Lemire's multiply-shift with rejection of the biased low zone.
  std::uint64_t x = (*this)();
  u128 m = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace edgeflow
