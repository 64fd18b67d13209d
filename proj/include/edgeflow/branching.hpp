#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace edgeflow {

class Stream;

/// N(t) = #{k : S_k <= t} with S_1 = 0. The path is exact up to `horizon`.
struct CountingPath {
  std::vector<double> jump_times;
  double horizon = std::numeric_limits<double>::infinity();

  std::size_t count_at(double t) const;
};

/// First k_max jump times of the Yule process; gaps are Exponential(k).
/// The horizon is the last simulated jump.
CountingPath yule_counting(std::size_t k_max, Stream& rng);
CountingPath yule_counting(std::size_t k_max, std::uint64_t seed);
/// Yule path simulated until its first jump beyond t_max; horizon t_max.
CountingPath yule_until(double t_max, Stream& rng);

/// N_inf(t) alone. Jumps are simulated while the population is below
/// `exact_cap`; from there each of the N individuals independently founds a
/// Yule family, whose size after the remaining time r is Geometric(e^{-r}).
/// The result has exactly the Yule law for any cap; cap 0 simulates every
/// jump.
std::uint64_t yule_population(double t, Stream& rng,
                              std::size_t exact_cap = 256);

/// Percolation counting process on G_n: gaps Exponential(k(n-k)/n),
/// k = 1..n-1. Complete, so the horizon is infinite.
CountingPath percolation_counting(std::size_t n, Stream& rng);
CountingPath percolation_counting(std::size_t n, std::uint64_t seed);

struct CoupledPaths {
  CountingPath yule;         // S_{inf,k} = sum_{i<k} Y_i / i
  CountingPath percolation;  // S_{n,k} = sum_{i<k} n Y_i / (i (n-i))
};

/// Both processes to k_max individuals from one Exponential(1) sequence.
CoupledPaths coupled_counting(std::size_t n, std::size_t k_max, Stream& rng);

/// Size-biased Yule process: an immortal ray with Poisson(1) arrivals P_i up
/// to the cut, each founding an independent Yule family; plus the root
/// family N_0.
struct SizeBiasedPath {
  double cut = std::numeric_limits<double>::infinity();
  double horizon = 0.0;
  std::vector<double> ray_points;
  CountingPath root;
  std::vector<CountingPath> branches;  // branches[i] starts at ray_points[i]

  std::size_t count_at(double t) const;
};

SizeBiasedPath size_biased_counting(double cut, double t_max, Stream& rng);

/// Ñ(t) by the ray construction, with the same hybrid as yule_population.
std::uint64_t size_biased_population(double t, Stream& rng,
                                     std::size_t exact_cap = 256);
/// Ñ(t) as N_0(t) + N'(t) - 1 for two independent Yule processes.
std::uint64_t size_biased_two_yule(double t, Stream& rng,
                                   std::size_t exact_cap = 256);

/// e^{-t} N(t); throws std::invalid_argument beyond the horizon.
double limit_w(const CountingPath& path, double t);
double limit_w(const SizeBiasedPath& path, double t);

/// P(N_inf(t) = k) = p (1-p)^{k-1}, p = e^{-t}.
double yule_pmf(double t, std::uint64_t k);

/// Law of the number of vertices on a path of length s, given that it
/// exists: P(k) proportional to (m)_k / n^k * s^k / k!, k = 0..m, where
/// m = n - 1 - tree_size. Evaluated in log space.
std::vector<double> exact_path_count_pmf(std::size_t n, std::size_t tree_size,
                                         double s);
/// Poisson(s) pmf on 0..k_max.
std::vector<double> poisson_pmf(double s, std::size_t k_max);
/// Inverse-CDF draw from a pmf on 0..size-1.
std::size_t sample_pmf(const std::vector<double>& pmf, Stream& rng);

}  // namespace edgeflow
