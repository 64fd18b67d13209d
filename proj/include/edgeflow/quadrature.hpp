#pragma once

#include <cstddef>
#include <functional>

namespace edgeflow {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // Kronrod-Gauss difference estimate
  std::size_t intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 4000;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a,b].
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts = {});

/// Integral over [a, +inf) by the map x = a + t/(1-t).
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a,
                                       const QuadratureOptions& opts = {});

/// Integral over the whole real line, split at `split`.
QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     double split = 0.0,
                                     const QuadratureOptions& opts = {});

}  // namespace edgeflow
