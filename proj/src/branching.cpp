#include "edgeflow/branching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgeflow/rng.hpp"

namespace edgeflow {

namespace {

constexpr std::uint64_t kYuleStream = 0x4017;
constexpr std::uint64_t kPercolationStream = 0x9e4c;

}  // namespace

std::size_t CountingPath::count_at(double t) const {
  if (t > horizon)
    throw std::invalid_argument("count_at: time beyond the simulated horizon");
  return static_cast<std::size_t>(
      std::upper_bound(jump_times.begin(), jump_times.end(), t) -
      jump_times.begin());
}

CountingPath yule_counting(std::size_t k_max, Stream& rng) {
  if (k_max < 1) throw std::invalid_argument("yule_counting: k_max >= 1");
  CountingPath path;
  path.jump_times.reserve(k_max);
  double s = 0.0;
  path.jump_times.push_back(s);
  for (std::size_t k = 1; k < k_max; ++k) {
    s += rng.exponential(static_cast<double>(k));
    path.jump_times.push_back(s);
  }
  path.horizon = s;
  return path;
}

CountingPath yule_counting(std::size_t k_max, std::uint64_t seed) {
  Stream rng(seed, kYuleStream);
  return yule_counting(k_max, rng);
}

CountingPath yule_until(double t_max, Stream& rng) {
  if (!(t_max >= 0.0)) throw std::invalid_argument("yule_until: t_max >= 0");
  CountingPath path;
  path.horizon = t_max;
  double s = 0.0;
  path.jump_times.push_back(s);
  for (;;) {
    s += rng.exponential(static_cast<double>(path.jump_times.size()));
    if (s > t_max) break;
    path.jump_times.push_back(s);
  }
  return path;
}

std::uint64_t yule_population(double t, Stream& rng, std::size_t exact_cap) {
  if (!(t >= 0.0)) throw std::invalid_argument("yule_population: t >= 0");
  std::uint64_t n = 1;
  double s = 0.0;
  while (exact_cap == 0 || n < exact_cap) {
    const double next = s + rng.exponential(static_cast<double>(n));
    if (next > t) return n;
    s = next;
    ++n;
  }
  const double p = std::exp(-(t - s));
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < n; ++i) total += rng.geometric(p);
  return total;
}

CountingPath percolation_counting(std::size_t n, Stream& rng) {
  if (n < 2) throw std::invalid_argument("percolation_counting: n >= 2");
  const auto nn = static_cast<double>(n);
  CountingPath path;
  path.jump_times.reserve(n);
  double s = 0.0;
  path.jump_times.push_back(s);
  for (std::size_t k = 1; k < n; ++k) {
    const auto kk = static_cast<double>(k);
    s += rng.exponential(kk * (nn - kk) / nn);
    path.jump_times.push_back(s);
  }
  return path;
}

CountingPath percolation_counting(std::size_t n, std::uint64_t seed) {
  Stream rng(seed, kPercolationStream);
  return percolation_counting(n, rng);
}

CoupledPaths coupled_counting(std::size_t n, std::size_t k_max, Stream& rng) {
  if (n < 2 || k_max < 1 || k_max > n - 1)
    throw std::invalid_argument("coupled_counting: need 1 <= k_max <= n-1");
  const auto nn = static_cast<double>(n);
  CoupledPaths out;
  auto& ys = out.yule.jump_times;
  auto& ps = out.percolation.jump_times;
  ys.reserve(k_max);
  ps.reserve(k_max);
  double s_inf = 0.0;
  double s_n = 0.0;
  ys.push_back(0.0);
  ps.push_back(0.0);
  for (std::size_t i = 1; i < k_max; ++i) {
    const double y = rng.exponential();
    const auto ii = static_cast<double>(i);
    s_inf += y / ii;
    s_n += nn * y / (ii * (nn - ii));
    ys.push_back(s_inf);
    ps.push_back(s_n);
  }
  out.yule.horizon = s_inf;
  out.percolation.horizon = s_n;
  return out;
}

std::size_t SizeBiasedPath::count_at(double t) const {
  if (t > horizon)
    throw std::invalid_argument("count_at: time beyond the simulated horizon");
  std::size_t total = root.count_at(t);
  for (std::size_t i = 0; i < ray_points.size() && ray_points[i] <= t; ++i)
    total += branches[i].count_at(t - ray_points[i]);
  return total;
}

SizeBiasedPath size_biased_counting(double cut, double t_max, Stream& rng) {
  if (!(t_max >= 0.0)) throw std::invalid_argument("size_biased_counting: t_max >= 0");
  if (!(cut >= 0.0)) throw std::invalid_argument("size_biased_counting: cut >= 0");
  SizeBiasedPath path;
  path.cut = cut;
  path.horizon = t_max;
  path.root = yule_until(t_max, rng);
  const double end = std::min(cut, t_max);
  for (double p = rng.exponential(); p <= end; p += rng.exponential()) {
    path.ray_points.push_back(p);
    path.branches.push_back(yule_until(t_max - p, rng));
  }
  return path;
}

std::uint64_t size_biased_population(double t, Stream& rng,
                                     std::size_t exact_cap) {
  std::uint64_t total = yule_population(t, rng, exact_cap);
  for (double p = rng.exponential(); p <= t; p += rng.exponential())
    total += yule_population(t - p, rng, exact_cap);
  return total;
}

std::uint64_t size_biased_two_yule(double t, Stream& rng, std::size_t exact_cap) {
  const std::uint64_t a = yule_population(t, rng, exact_cap);
  const std::uint64_t b = yule_population(t, rng, exact_cap);
  return a + b - 1;
}

double limit_w(const CountingPath& path, double t) {
  return std::exp(-t) * static_cast<double>(path.count_at(t));
}

double limit_w(const SizeBiasedPath& path, double t) {
  return std::exp(-t) * static_cast<double>(path.count_at(t));
}

double yule_pmf(double t, std::uint64_t k) {
  if (k < 1) return 0.0;
  const double p = std::exp(-t);
  if (k == 1) return p;
  return p * std::exp(static_cast<double>(k - 1) * std::log1p(-p));
}

namespace {

std::vector<double> normalize_log_weights(std::vector<double> logw) {
  const double top = *std::max_element(logw.begin(), logw.end());
  double total = 0.0;
  for (auto& w : logw) {
    w = std::exp(w - top);
    total += w;
  }
  for (auto& w : logw) w /= total;
  return logw;
}

}  // namespace

std::vector<double> exact_path_count_pmf(std::size_t n, std::size_t tree_size,
                                         double s) {
  if (n < tree_size + 1) throw std::invalid_argument("exact_path_count_pmf: n too small");
  if (!(s > 0.0)) throw std::invalid_argument("exact_path_count_pmf: s > 0");
  const std::size_t m = n - 1 - tree_size;
  const double log_n = std::log(static_cast<double>(n));
  const double log_s = std::log(s);
  const double lg_m = std::lgamma(static_cast<double>(m) + 1.0);
  std::vector<double> logw(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    const auto kk = static_cast<double>(k);
    logw[k] = lg_m - std::lgamma(static_cast<double>(m - k) + 1.0) - kk * log_n +
              kk * log_s - std::lgamma(kk + 1.0);
  }
  return normalize_log_weights(std::move(logw));
}

std::vector<double> poisson_pmf(double s, std::size_t k_max) {
  if (!(s > 0.0)) throw std::invalid_argument("poisson_pmf: s > 0");
  std::vector<double> p(k_max + 1);
  const double log_s = std::log(s);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto kk = static_cast<double>(k);
    p[k] = std::exp(kk * log_s - s - std::lgamma(kk + 1.0));
  }
  return p;
}

std::size_t sample_pmf(const std::vector<double>& pmf, Stream& rng) {
  if (pmf.empty()) throw std::invalid_argument("sample_pmf: empty pmf");
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    acc += pmf[k];
    if (u <= acc) return k;
  }
  return pmf.size() - 1;
}

}  // namespace edgeflow
