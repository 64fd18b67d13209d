#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace edgeflow {

/// Streaming mean/variance (Welford). Merge is exact-order dependent, so
/// callers that need reproducibility merge in a fixed order.
class RunningStats {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  double stddev() const noexcept { return std::sqrt(variance()); }
  /// Standard error of the mean.
  double standard_error() const noexcept {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_))
                      : 0.0;
  }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

RunningStats summarize(std::span<const double> xs);

/// Kolmogorov-Smirnov statistic sup|F_m - F| of a sample against a
/// continuous reference CDF.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit. `expected` holds expected counts (same total as
/// observed); dof = cells - 1 - estimated_parameters.
ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected,
                               std::size_t estimated_parameters = 0);

/// Upper tail probability of the chi-square distribution.
double chi_square_survival(double statistic, std::size_t dof);

double pearson_correlation(std::span<const double> x,
                           std::span<const double> y);

/// Total variation distance between two pmfs on a common support (shorter
/// vector is zero-padded).
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace edgeflow
