#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgeflow/empirics.hpp"

namespace edgeflow {

/// Modified Bessel function of the second kind, order zero, for x > 0.
/// Power series for x <= 2; Temme's continued fraction (Steed's algorithm)
/// above.
double bessel_k0(double x);

/// Leading-order asymptote sqrt(pi/(2x)) e^{-x}.
double bessel_k0_asymptote(double x);

/// Tail law of normalized edge flows, G(z) = 2 K0(2 sqrt z).
double flow_tail_limit(double z);

/// G(z) by nested quadrature of its defining integral
/// int_0^inf P(W1 W2 e^{-u} > z) du, with no Bessel functions involved.
double flow_tail_limit_quadrature(double z);

/// sqrt(pi) z^{-1/4} exp(-2 sqrt z), the large-z asymptote of G.
double flow_tail_asymptote(double z);

struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Monte Carlo mean of max(0, log(W1 W2 / z)) over m Exponential(1) pairs.
Estimate flow_tail_limit_montecarlo(double z, std::size_t m, std::uint64_t seed);

/// G(z) by a selectable route; the three must agree on their common domain.
class GEvaluator {
 public:
  enum class Method { ClosedForm, Quadrature, MonteCarlo };

  explicit GEvaluator(Method method = Method::ClosedForm,
                      std::size_t samples = 1'000'000, std::uint64_t seed = 1)
      : method_(method), samples_(samples), seed_(seed) {}

  Method method() const noexcept { return method_; }
  double operator()(double z) const;

 private:
  Method method_;
  std::size_t samples_;
  std::uint64_t seed_;
};

struct MellinCheck {
  double gamma_squared = 0.0;  // Gamma(y)^2
  double transform = 0.0;      // int_0^inf z^{y-1} G(z) dz by quadrature
  double gap = 0.0;
};

/// y must lie in (0.5, 3).
MellinCheck mellin_check(double y);

/// Points (U, W1 W2 e^{-U}) with U uniform on (0, ell_max), each of weight
/// ell_max/m: the limit measure restricted to lengths below ell_max.
WeightedPointSet sample_psi(double ell_max, std::size_t m, std::uint64_t seed);

/// Xi truncated to the first K Poisson points:
/// sum_{i != j <= K} W_i W_j exp(-xi_i - xi_j).
std::vector<double> sample_xi(std::size_t K, std::size_t m, std::uint64_t seed);
/// E[Xi] - E[Xi_K] = 1 - 2 sum_{i<K} 3^{-i} (1 - 2^{-(K-i)}).
double xi_truncation_bias(std::size_t K);
/// Smallest K whose truncation bias is at most `bound`.
std::size_t xi_truncation_for(double bound);

/// Leftmost point of the Cox process with rate W1 W2 e^s, W's of density
/// w e^{-w}.
std::vector<double> sample_cox_leftmost(std::size_t m, std::uint64_t seed);
/// P(L > s) = E exp(-W1 W2 e^s), by quadrature over the Gamma(2,1) density.
double cox_survival(double s);
/// int e^s P(L > s) ds by nested quadrature (equals 1).
double cox_integral();
/// Median of L given W1 W2 = w: log(log 2 / w).
double cox_conditional_median(double w);

/// Joint draws of the limit of (D(i,j) - log n) for k terminals in both
/// representations.
struct DistanceLimitSamples {
  std::size_t k = 0;
  std::size_t m = 0;
  /// m rows of k-1 values xi_1 + eta_{1j}, j = 2..k.
  std::vector<double> gumbel_logistic;
  /// m rows of k(k-1)/2 values xi_i + xi_j - xi_ij, pairs i<j in
  /// lexicographic order.
  std::vector<double> gumbel_triples;

  /// Marginal D(1,2) column of each representation.
  std::vector<double> first_pair_gumbel_logistic() const;
  std::vector<double> first_pair_gumbel_triples() const;
};

DistanceLimitSamples distance_limit_samples(std::size_t k, std::size_t m,
                                            std::uint64_t seed);

double gumbel_cdf(double x);
double logistic_cdf(double x);
/// CDF of xi + eta: 1 - int_0^inf e^{-u} / (1 + e^x u) du.
double distance_limit_cdf(double x);

inline constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace edgeflow
