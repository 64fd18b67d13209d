#include "edgeflow/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace edgeflow {

namespace {

// Gauss-Kronrod 7/15 nodes on [-1,1] (positive half; index 7 is the centre).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes 1,3,5 and the centre.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw std::invalid_argument("integrate: bounds must be finite");
  if (a == b) return {};
  if (a > b) {
    auto r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  double total = first.value;
  double err = first.error;
  heap.push(first);
  while (heap.size() < opts.max_intervals &&
         err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // cannot refine further
      heap.push(worst);
      break;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to avoid drift from the incremental updates.
  QuadratureResult r;
  r.intervals = heap.size();
  std::vector<Segment> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const auto& s : segs) {
    r.value += s.value;
    r.error += s.error;
  }
  return r;
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a,
                                       const QuadratureOptions& opts) {
  auto mapped = [&](double t) {
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     double split,
                                     const QuadratureOptions& opts) {
  auto right = integrate_to_infinity(f, split, opts);
  auto left = integrate_to_infinity([&](double x) { return f(2 * split - x); },
                                    split, opts);
  return {left.value + right.value, left.error + right.error,
          left.intervals + right.intervals};
}

}  // namespace edgeflow
