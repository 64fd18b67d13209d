#include "edgeflow/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace edgeflow {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("geometric_grid: need 0 < lo < hi, count >= 2");
  std::vector<double> zs(count);
  const double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    zs[i] = lo * std::exp(ratio * static_cast<double>(i));
  zs.back() = hi;
  return zs;
}

std::vector<double> default_z_grid() { return geometric_grid(0.05, 8.0, 40); }

TailCurve tail_curve(const FlowTable& flows, std::span<const double> zs,
                     double threshold_scale) {
  if (zs.empty()) throw std::invalid_argument("tail_curve: empty z grid");
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!(zs[i] > 0.0))
      throw std::invalid_argument("tail_curve: z values must be positive");
    if (i > 0 && !(zs[i] > zs[i - 1]))
      throw std::invalid_argument("tail_curve: z grid must be ascending");
  }
  const std::size_t n = flows.size();
  std::vector<double> positive;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const double f = flows.flow(u, v);
      if (f > 0.0) positive.push_back(f);
    }
  }
  std::sort(positive.begin(), positive.end());
  const double log_n = std::log(static_cast<double>(n));
  TailCurve curve;
  curve.zs.assign(zs.begin(), zs.end());
  curve.values.reserve(zs.size());
  for (double z : zs) {
    const double threshold = z * threshold_scale * log_n;
    const auto above = positive.end() -
                       std::upper_bound(positive.begin(), positive.end(), threshold);
    curve.values.push_back(static_cast<double>(above) / static_cast<double>(n));
  }
  return curve;
}

WeightedPointSet psi_points(const Network& net, const FlowTable& flows) {
  const std::size_t n = net.size();
  if (flows.size() != n)
    throw std::invalid_argument("psi_points: flow table does not match network");
  const double log_n = std::log(static_cast<double>(n));
  const double w = 1.0 / static_cast<double>(n);
  WeightedPointSet points;
  points.reserve(n * (n - 1));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      points.push_back({net.length_unchecked(u, v), flows.flow(u, v) / log_n, w});
    }
  }
  return points;
}

FlowLengthIdentity flow_length_identity(const Network& net,
                                        const FlowTable& flows,
                                        const DistanceStats& distances) {
  const std::size_t n = net.size();
  if (flows.size() != n || distances.n != n)
    throw std::invalid_argument("flow_length_identity: mismatched inputs");
  long double weighted = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const double vol = flows.volume(u, v);
      if (vol != 0.0) weighted += static_cast<long double>(vol) * net.length_unchecked(u, v);
    }
  }
  const auto nn = static_cast<long double>(n);
  FlowLengthIdentity r;
  r.lhs = static_cast<double>(weighted / (nn * nn));
  r.rhs = distances.mean_distance();
  r.relative_gap = r.rhs != 0.0 ? std::abs(r.lhs - r.rhs) / std::abs(r.rhs) : 0.0;
  return r;
}

VertexFlowAggregate vertex_flow_aggregate(std::span<const double> vertex_flows,
                                          const DistanceStats& distances) {
  const std::size_t n = distances.n;
  if (vertex_flows.size() != n)
    throw std::invalid_argument("vertex_flow_aggregate: size mismatch");
  VertexFlowAggregate r;
  long double sum = 0;
  for (double f : vertex_flows) sum += f;
  const auto nn = static_cast<double>(n);
  r.from_vertex_flows = static_cast<double>(sum / nn);
  const double interior =
      static_cast<double>(distances.hop_sum) - nn * (nn - 1.0);
  r.from_hops = interior / (nn * nn);
  return r;
}

void write_tail_comparison(std::ostream& out, const TailCurve& curve,
                           const std::function<double(double)>& limit) {
  out << "z,G_hat,G_limit,abs_err\n";
  for (std::size_t i = 0; i < curve.zs.size(); ++i) {
    const double g = limit(curve.zs[i]);
    out << format_number(curve.zs[i]) << ',' << format_number(curve.values[i])
        << ',' << format_number(g) << ','
        << format_number(std::abs(curve.values[i] - g)) << '\n';
  }
}

void write_measure(std::ostream& out, const WeightedPointSet& points) {
  out << "ell,y,weight\n";
  for (const auto& p : points) {
    out << format_number(p.ell) << ',' << format_number(p.y) << ','
        << format_number(p.weight) << '\n';
  }
}

void write_flow_table(std::ostream& out, const Network& net,
                      const FlowTable& flows) {
  out << "u,v,length,count,flow\n";
  const std::size_t n = net.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || flows.count(u, v) == 0) continue;
      out << u << ',' << v << ',' << format_number(net.length_unchecked(u, v))
          << ',' << flows.count(u, v) << ','
          << format_number(flows.flow(u, v)) << '\n';
    }
  }
}

void write_distance_summary(std::ostream& out, const DistanceStats& stats) {
  out << "source,mean_dist,max_dist,mean_hops\n";
  for (const auto& s : stats.per_source) {
    out << s.source << ',' << format_number(s.mean_dist) << ','
        << format_number(s.max_dist) << ',' << format_number(s.mean_hops)
        << '\n';
  }
}

}  // namespace edgeflow
