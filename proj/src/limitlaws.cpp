#include "edgeflow/limitlaws.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "edgeflow/quadrature.hpp"
#include "edgeflow/rng.hpp"
#include "edgeflow/stats.hpp"

namespace edgeflow {

namespace {

constexpr double kPi = std::numbers::pi;

double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;  // q^k / (k!)^2
  double i0 = 1.0;
  double harmonic = 0.0;
  double tail = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k));
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term < 1e-18 * i0) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + tail;
}

// Temme's method for K_0 via Steed's evaluation of the continued fraction
// for K_1/K_0; converges rapidly for x >= 2.
double k0_continued_fraction(double x) {
  constexpr double kEps = 1e-16;
  const double a1 = 0.25;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
}

}  // namespace

double bessel_k0(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("bessel_k0: x must be positive");
  if (x <= 2.0) return k0_series(x);
  if (x > 745.0) return 0.0;  // below the smallest subnormal
  return k0_continued_fraction(x);
}

double bessel_k0_asymptote(double x) {
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
}

double flow_tail_limit(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("G(z) needs z > 0");
  if (std::isinf(z)) return 0.0;
  return 2.0 * bessel_k0(2.0 * std::sqrt(z));
}

double flow_tail_asymptote(double z) {
  return std::sqrt(kPi) * std::pow(z, -0.25) * std::exp(-2.0 * std::sqrt(z));
}

double flow_tail_limit_quadrature(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("G(z) needs z > 0");
  const QuadratureOptions inner_opts{1e-15, 1e-13, 2000};
  // P(W1 W2 > x) = int_0^inf e^{-w} e^{-x/w} dw, with w = e^r.
  auto product_survival = [&](double x) {
    if (x > 1e6) return 0.0;  // below exp(-2000)
    auto f = [x](double r) {
      const double w = std::exp(r);
      const double e = r - w - x / w;
      return e < -745.0 ? 0.0 : std::exp(e);
    };
    return integrate_real_line(f, 0.5 * std::log(x), inner_opts).value;
  };
  // G(z) = int_0^inf P(W1 W2 > z e^u) du
  auto outer = [&](double u) {
    if (u > 700.0) return 0.0;
    return product_survival(z * std::exp(u));
  };
  return integrate_to_infinity(outer, 0.0, {1e-13, 1e-11, 2000}).value;
}

Estimate flow_tail_limit_montecarlo(double z, std::size_t m, std::uint64_t seed) {
  if (!(z > 0.0)) throw std::invalid_argument("G(z) needs z > 0");
  if (m < 1) throw std::invalid_argument("need at least one sample");
  Stream rng(seed, 0x6a11);
  RunningStats stats;
  const double log_z = std::log(z);
  for (std::size_t i = 0; i < m; ++i) {
    const double v = std::log(rng.exponential()) + std::log(rng.exponential()) - log_z;
    stats.add(v > 0.0 ? v : 0.0);
  }
  return {stats.mean(), stats.standard_error()};
}

double GEvaluator::operator()(double z) const {
  switch (method_) {
    case Method::ClosedForm: return flow_tail_limit(z);
    case Method::Quadrature: return flow_tail_limit_quadrature(z);
    case Method::MonteCarlo:
      return flow_tail_limit_montecarlo(z, samples_, seed_).value;
  }
  return flow_tail_limit(z);
}

MellinCheck mellin_check(double y) {
  if (!(y > 0.5 && y < 3.0))
    throw std::invalid_argument("mellin_check: y must lie in (0.5, 3)");
  // z = e^s: int e^{s y} G(e^s) ds
  auto f = [y](double s) {
    if (s > 12.0 || s < -700.0) return 0.0;  // G(e^12) < exp(-800)
    const double g = flow_tail_limit(std::exp(s));
    return g == 0.0 ? 0.0 : std::exp(s * y) * g;
  };
  MellinCheck r;
  r.transform = integrate_real_line(f, 0.0, {1e-14, 1e-13, 4000}).value;
  const double gamma = std::tgamma(y);
  r.gamma_squared = gamma * gamma;
  r.gap = std::abs(r.transform - r.gamma_squared);
  return r;
}

WeightedPointSet sample_psi(double ell_max, std::size_t m, std::uint64_t seed) {
  if (!(ell_max > 0.0)) throw std::invalid_argument("sample_psi: ell_max > 0");
  Stream rng(seed, 0x9517);
  WeightedPointSet pts;
  pts.reserve(m);
  const double w = m > 0 ? ell_max / static_cast<double>(m) : 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double u = ell_max * rng.uniform();
    const double y = rng.exponential() * rng.exponential() * std::exp(-u);
    pts.push_back({u, y, w});
  }
  return pts;
}

std::vector<double> sample_xi(std::size_t K, std::size_t m, std::uint64_t seed) {
  if (K < 2) throw std::invalid_argument("sample_xi: K must be at least 2");
  Stream rng(seed, 0x7131);
  std::vector<double> out(m);
  for (std::size_t s = 0; s < m; ++s) {
    double xi = 0.0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
      xi += rng.exponential();
      const double a = rng.exponential() * std::exp(-xi);
      sum += a;
      sum_sq += a * a;
    }
    out[s] = sum * sum - sum_sq;
  }
  return out;
}

double xi_truncation_bias(std::size_t K) {
  if (K < 2) throw std::invalid_argument("xi_truncation_bias: K >= 2");
  double kept = 0.0;
  for (std::size_t i = 1; i < K; ++i) {
    kept += std::pow(3.0, -static_cast<double>(i)) *
            (1.0 - std::pow(2.0, -static_cast<double>(K - i)));
  }
  return std::max(0.0, 1.0 - 2.0 * kept);
}

std::size_t xi_truncation_for(double bound) {
  if (!(bound > 0.0)) throw std::invalid_argument("bound must be positive");
  std::size_t K = 2;
  while (xi_truncation_bias(K) > bound && K < 4096) ++K;
  return K;
}

std::vector<double> sample_cox_leftmost(std::size_t m, std::uint64_t seed) {
  Stream rng(seed, 0xc0c5);
  std::vector<double> out(m);
  for (auto& l : out) {
    const double rate = rng.gamma2() * rng.gamma2();
    // P(L > s | rate) = exp(-rate e^s)  =>  L = log(E / rate)
    l = std::log(rng.exponential() / rate);
  }
  return out;
}

double cox_survival(double s) {
  // E exp(-W1 W2 e^s) = int_0^inf a e^{-a} (1 + a e^s)^{-2} da after the
  // inner Gamma(2,1) integral in W2; a = e^r.
  auto f = [s](double r) {
    const double a = std::exp(r);
    if (a > 800.0) return 0.0;
    const double denom = 1.0 + std::exp(r + s);
    return a * a * std::exp(-a) / (denom * denom);
  };
  return integrate_real_line(f, std::min(0.0, -s), {1e-16, 1e-13, 2000}).value;
}

double cox_integral() {
  auto f = [](double s) {
    if (s > 700.0) return 0.0;
    return std::exp(s) * cox_survival(s);
  };
  return integrate_real_line(f, 0.0, {1e-13, 1e-11, 2000}).value;
}

double cox_conditional_median(double w) {
  if (!(w > 0.0)) throw std::invalid_argument("cox median needs w > 0");
  return std::log(std::log(2.0) / w);
}

std::vector<double> DistanceLimitSamples::first_pair_gumbel_logistic() const {
  std::vector<double> out(m);
  for (std::size_t r = 0; r < m; ++r) out[r] = gumbel_logistic[r * (k - 1)];
  return out;
}

std::vector<double> DistanceLimitSamples::first_pair_gumbel_triples() const {
  const std::size_t pairs = k * (k - 1) / 2;
  std::vector<double> out(m);
  for (std::size_t r = 0; r < m; ++r) out[r] = gumbel_triples[r * pairs];
  return out;
}

DistanceLimitSamples distance_limit_samples(std::size_t k, std::size_t m,
                                            std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("distance limits need k >= 2");
  DistanceLimitSamples out;
  out.k = k;
  out.m = m;
  const std::size_t pairs = k * (k - 1) / 2;
  out.gumbel_logistic.resize(m * (k - 1));
  out.gumbel_triples.resize(m * pairs);
  Stream rng_a(seed, 0xd157);
  Stream rng_b(seed, 0xd158);
  std::vector<double> xi(k);
  for (std::size_t r = 0; r < m; ++r) {
    const double xi1 = rng_a.gumbel();
    for (std::size_t j = 0; j + 1 < k; ++j)
      out.gumbel_logistic[r * (k - 1) + j] = xi1 + rng_a.logistic();
    for (auto& x : xi) x = rng_b.gumbel();
    std::size_t p = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j)
        out.gumbel_triples[r * pairs + p++] = xi[i] + xi[j] - rng_b.gumbel();
    }
  }
  return out;
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double logistic_cdf(double x) {
  return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

double distance_limit_cdf(double x) {
  if (x > 700.0) return 1.0;
  const double a = std::exp(x);
  auto f = [a](double u) { return std::exp(-u) / (1.0 + a * u); };
  return 1.0 - integrate_to_infinity(f, 0.0, {1e-14, 1e-12, 2000}).value;
}

}  // namespace edgeflow
