#include "edgeflow/localview.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "edgeflow/parallel.hpp"
#include "edgeflow/rng.hpp"
#include "edgeflow/spflow.hpp"
#include "edgeflow/stats.hpp"

namespace edgeflow {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_edge(const Network& net, Vertex u, Vertex v, double tau) {
  if (u >= net.size() || v >= net.size() || u == v)
    throw std::invalid_argument("neighborhood: invalid center edge");
  if (!(tau > 0.0)) throw std::invalid_argument("neighborhood: tau must be positive");
}

}  // namespace

Neighborhood neighborhood_from_balls(const Network& net, Vertex u, Vertex v,
                                     double tau, const Ball& ball_u,
                                     const Ball& ball_v) {
  check_edge(net, u, v, tau);
  Neighborhood nb;
  nb.left_end = u;
  nb.right_end = v;
  nb.center_length = net.length_unchecked(u, v);
  nb.radius = tau;

  // Merge the two scans by vertex id.
  Ball a = ball_u;
  Ball b = ball_v;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    Vertex x;
    double dl = kInf;
    double dr = kInf;
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      x = a[i].first;
      dl = a[i++].second;
    } else if (i >= a.size() || b[j].first < a[i].first) {
      x = b[j].first;
      dr = b[j++].second;
    } else {
      x = a[i].first;
      dl = a[i++].second;
      dr = b[j++].second;
    }
    const bool left = dl <= dr;
    const double d = left ? dl : dr;
    nb.members.push_back({x, d, left, tau - d});
    if (left) ++nb.left_count;
    else ++nb.right_count;
  }

  const std::size_t m = nb.members.size();
  DisjointSets sets(m);
  std::size_t components = m;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      const auto& x = nb.members[p];
      const auto& y = nb.members[q];
      const bool center = (x.v == u && y.v == v) || (x.v == v && y.v == u);
      const double len = net.length_unchecked(x.v, y.v);
      if (center || x.distance + len + y.distance <= 2.0 * tau) {
        ++nb.edge_count;
        if (sets.unite(p, q)) --components;
      }
    }
  }
  nb.is_tree = components == 1 && nb.edge_count + 1 == m;
  return nb;
}

Neighborhood extract_neighborhood(const Network& net, Vertex u, Vertex v,
                                  double tau) {
  check_edge(net, u, v, tau);
  return neighborhood_from_balls(net, u, v, tau, truncated_distances(net, u, tau),
                                 truncated_distances(net, v, tau));
}

double phi_tau(const Neighborhood& nbhd) {
  if (!nbhd.is_tree || nbhd.center_length > nbhd.radius) return 0.0;
  return static_cast<double>(nbhd.left_count) *
         static_cast<double>(nbhd.right_count) *
         std::exp(-2.0 * nbhd.radius - nbhd.center_length);
}

std::vector<LocalEdge> local_edges(const Network& net, double tau,
                                   unsigned workers) {
  if (!(tau > 0.0)) throw std::invalid_argument("local_edges: tau must be positive");
  const std::size_t n = net.size();
  std::vector<Ball> balls(n);
  parallel_for(n, workers, [&](std::size_t x) {
    balls[x] = truncated_distances(net, static_cast<Vertex>(x), tau);
  });
  std::vector<std::vector<LocalEdge>> per_vertex(n);
  parallel_for(n, workers, [&](std::size_t x) {
    const auto u = static_cast<Vertex>(x);
    for (Vertex v = u + 1; v < n; ++v) {
      const double len = net.length_unchecked(u, v);
      if (len > tau) continue;
      const auto nb = neighborhood_from_balls(net, u, v, tau, balls[u], balls[v]);
      per_vertex[x].push_back(
          {u, v, len, nb.is_tree, nb.left_count, nb.right_count, phi_tau(nb)});
    }
  });
  std::vector<LocalEdge> out;
  for (auto& edges : per_vertex) out.insert(out.end(), edges.begin(), edges.end());
  return out;
}

WeightedPointSet phi_measure(const std::vector<LocalEdge>& edges, std::size_t n) {
  const double w = 1.0 / static_cast<double>(n);
  WeightedPointSet pts;
  pts.reserve(2 * edges.size());
  for (const auto& e : edges) {
    pts.push_back({e.length, e.phi, w});
    pts.push_back({e.length, e.phi, w});
  }
  return pts;
}

WeightedPointSet phi_measure(const Network& net, double tau, unsigned workers) {
  return phi_measure(local_edges(net, tau, workers), net.size());
}

WeightedPointSet phi_limit_points(double tau, std::size_t m, std::uint64_t seed) {
  if (!(tau > 0.0)) throw std::invalid_argument("phi_limit_points: tau > 0");
  Stream rng(seed, 0xf1);
  const double p = std::exp(-tau);
  const double w = m > 0 ? tau / static_cast<double>(m) : 0.0;
  WeightedPointSet pts;
  pts.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double u = tau * rng.uniform();
    const auto w1 = static_cast<double>(rng.geometric(p));
    const auto w2 = static_cast<double>(rng.geometric(p));
    pts.push_back({u, w1 * w2 * std::exp(-2.0 * tau - u), w});
  }
  return pts;
}

double phi_flow_correlation(const std::vector<LocalEdge>& edges,
                            const FlowTable& flows) {
  const double log_n = std::log(static_cast<double>(flows.size()));
  std::vector<double> phi;
  std::vector<double> f;
  for (const auto& e : edges) {
    phi.push_back(e.phi);
    f.push_back(flows.flow(e.u, e.v) / log_n);
    phi.push_back(e.phi);
    f.push_back(flows.flow(e.v, e.u) / log_n);
  }
  return phi.size() > 2 ? pearson_correlation(phi, f) : 0.0;
}

void write_local_edges(std::ostream& out, const std::vector<LocalEdge>& edges) {
  out << "u,v,L_e,is_tree,nL,nR,phi\n";
  for (const auto& e : edges) {
    out << e.u << ',' << e.v << ',' << format_number(e.length) << ','
        << (e.is_tree ? 1 : 0) << ',' << e.left_count << ',' << e.right_count
        << ',' << format_number(e.phi) << '\n';
  }
}

}  // namespace edgeflow
