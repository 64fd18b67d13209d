#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "edgeflow/randnet.hpp"
#include "edgeflow/spflow.hpp"

namespace edgeflow {

struct WeightedPoint {
  double ell;     // edge length
  double y;       // normalized value (flow / log n, or phi)
  double weight;  // 1/n for empirical measures
};

using WeightedPointSet = std::vector<WeightedPoint>;

/// G-hat_n(z) = n^-1 #{directed e : F_n(e) > z log n} on a grid.
struct TailCurve {
  std::vector<double> zs;
  std::vector<double> values;
};

/// Geometric grid of `count` points from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t count);
/// 40 points, 0.05 to 8.
std::vector<double> default_z_grid();

/// Strict exceedance counts over directed edges. `threshold_scale` rescales
/// the z log n threshold (mu or mu^2 for random demands).
TailCurve tail_curve(const FlowTable& flows, std::span<const double> zs,
                     double threshold_scale = 1.0);

/// One point (L_e, F_n(e)/log n) of weight 1/n per directed edge, zero flows
/// included.
WeightedPointSet psi_points(const Network& net, const FlowTable& flows);

template <class Fn>
double measure_integral(const WeightedPointSet& points, Fn&& h) {
  double total = 0.0;
  for (const auto& p : points) total += p.weight * h(p.ell, p.y);
  return total;
}

inline double total_weight(const WeightedPointSet& points) {
  return measure_integral(points, [](double, double) { return 1.0; });
}

struct FlowLengthIdentity {
  double lhs = 0.0;  // n^-1 sum_e flow(e) L_e
  double rhs = 0.0;  // n^-2 sum_{i != j} D(i,j)
  double relative_gap = 0.0;
};

/// Checks n^-1 sum_e f(e) L_e == n^-2 sum_{i,j} D(i,j). Truncated or
/// demand-weighted tables give lhs <= rhs or an unrelated lhs respectively.
FlowLengthIdentity flow_length_identity(const Network& net,
                                        const FlowTable& flows,
                                        const DistanceStats& distances);

/// n^-1 sum_v F*_n(v) and the exact path-count form n^-2 sum (hops - 1).
struct VertexFlowAggregate {
  double from_vertex_flows = 0.0;
  double from_hops = 0.0;
};
VertexFlowAggregate vertex_flow_aggregate(std::span<const double> vertex_flows,
                                          const DistanceStats& distances);

// CSV emitters ("z,G_hat,G_limit,abs_err", "ell,y,weight",
// "u,v,length,count,flow", "source,mean_dist,max_dist,mean_hops").
void write_tail_comparison(std::ostream& out, const TailCurve& curve,
                           const std::function<double(double)>& limit);
void write_measure(std::ostream& out, const WeightedPointSet& points);
void write_flow_table(std::ostream& out, const Network& net,
                      const FlowTable& flows);
void write_distance_summary(std::ostream& out, const DistanceStats& stats);

/// printf("%.12g") formatting shared by the CSV writers.
std::string format_number(double x);

}  // namespace edgeflow
