#include "edgeflow/spflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "edgeflow/parallel.hpp"
#include "edgeflow/rng.hpp"

namespace edgeflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_source(std::size_t n, Vertex source) {
  if (source >= n)
    throw std::invalid_argument("source " + std::to_string(source) +
                                " out of range for n=" + std::to_string(n));
}

// Relaxation with the deterministic tie rule: equal distance keeps the
// smaller-index parent.
inline void relax(std::vector<double>& dist, std::vector<std::int32_t>& parent,
                  Vertex u, Vertex v, double nd) {
  if (nd < dist[v] ||
      (nd == dist[v] && static_cast<std::int32_t>(u) < parent[v])) {
    dist[v] = nd;
    parent[v] = static_cast<std::int32_t>(u);
  }
}

void finish_tree(PercolationTree& tree) {
  const std::size_t n = tree.size();
  tree.subtree_size.assign(n, 1);
  tree.hops.assign(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    const Vertex v = tree.order[k];
    tree.hops[v] = tree.hops[static_cast<Vertex>(tree.parent[v])] + 1;
  }
  for (std::size_t k = n; k-- > 1;) {
    const Vertex v = tree.order[k];
    tree.subtree_size[static_cast<Vertex>(tree.parent[v])] += tree.subtree_size[v];
  }
}

template <class RowAccess>
PercolationTree dense_scan(std::size_t n, Vertex source, RowAccess&& length) {
  PercolationTree tree;
  tree.source = source;
  tree.dist.assign(n, kInf);
  tree.parent.assign(n, kNoParent);
  tree.order.reserve(n);
  tree.dist[source] = 0.0;

  std::vector<Vertex> remaining;
  remaining.reserve(n - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v != source) remaining.push_back(v);
  }
  Vertex u = source;
  tree.order.push_back(u);
  while (!remaining.empty()) {
    const double du = tree.dist[u];
    std::size_t best_idx = 0;
    double best = kInf;
    Vertex best_v = std::numeric_limits<Vertex>::max();
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      const Vertex v = remaining[idx];
      relax(tree.dist, tree.parent, u, v, du + length(u, v));
      const double dv = tree.dist[v];
      if (dv < best || (dv == best && v < best_v)) {
        best = dv;
        best_v = v;
        best_idx = idx;
      }
    }
    remaining[best_idx] = remaining.back();
    remaining.pop_back();
    u = best_v;
    tree.order.push_back(u);
  }
  finish_tree(tree);
  return tree;
}

}  // namespace

std::size_t PercolationTree::wetted_within(double t) const noexcept {
  // order is sorted by dist
  std::size_t lo = 0, hi = order.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (dist[order[mid]] <= t) lo = mid + 1; else hi = mid;
  }
  return lo;
}

DenseLengths::DenseLengths(const Network& net) : n_(net.size()), data_(n_ * n_, 0.0) {
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i + 1; j < n_; ++j) {
      const double l = net.length_unchecked(i, j);
      data_[i * n_ + j] = l;
      data_[j * n_ + i] = l;
    }
  }
}

PercolationTree shortest_path_tree(const DenseLengths& lengths, Vertex source) {
  check_source(lengths.size(), source);
  return dense_scan(lengths.size(), source,
                    [&](Vertex u, Vertex v) { return lengths.row(u)[v]; });
}

PercolationTree shortest_path_tree(const Network& net, Vertex source) {
  check_source(net.size(), source);
  return dense_scan(net.size(), source, [&](Vertex u, Vertex v) {
    return net.length_unchecked(u, v);
  });
}

PercolationTree shortest_path_tree_heap(const Network& net, Vertex source) {
  const std::size_t n = net.size();
  check_source(n, source);
  PercolationTree tree;
  tree.source = source;
  tree.dist.assign(n, kInf);
  tree.parent.assign(n, kNoParent);
  tree.order.reserve(n);
  tree.dist[source] = 0.0;

  using Entry = std::pair<double, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<bool> settled(n, false);
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u] || d != tree.dist[u]) continue;
    settled[u] = true;
    tree.order.push_back(u);
    for (Vertex v = 0; v < n; ++v) {
      if (settled[v] || v == u) continue;
      const double before = tree.dist[v];
      relax(tree.dist, tree.parent, u, v, d + net.length_unchecked(u, v));
      if (tree.dist[v] < before) heap.emplace(tree.dist[v], v);
    }
  }
  finish_tree(tree);
  return tree;
}

std::vector<std::pair<Vertex, double>> truncated_distances(const Network& net,
                                                           Vertex source,
                                                           double radius) {
  const std::size_t n = net.size();
  check_source(n, source);
  std::vector<std::pair<Vertex, double>> out;
  using Entry = std::pair<double, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<double> dist(n, kInf);
  std::vector<bool> settled(n, false);
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u] || d != dist[u]) continue;
    if (d > radius) break;
    settled[u] = true;
    out.emplace_back(u, d);
    for (Vertex v = 0; v < n; ++v) {
      if (settled[v] || v == u) continue;
      const double nd = d + net.length_unchecked(u, v);
      if (nd <= radius && nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return out;
}

std::vector<EdgeCount> subtree_flow(const PercolationTree& tree) {
  std::vector<EdgeCount> out;
  out.reserve(tree.size() > 0 ? tree.size() - 1 : 0);
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const Vertex v = tree.order[k];
    out.push_back({static_cast<Vertex>(tree.parent[v]), v, tree.subtree_size[v]});
  }
  return out;
}

// ---------------------------------------------------------------- demands

DemandSpec DemandSpec::iid_pairs(double mean, std::uint64_t seed) {
  if (!(mean > 0.0)) throw std::invalid_argument("demand mean must be positive");
  DemandSpec d;
  d.kind = Kind::IidPairs;
  d.mean = mean;
  d.seed = seed;
  return d;
}

DemandSpec DemandSpec::gravitational(std::vector<double> weights,
                                     std::optional<double> nominal_mean) {
  if (weights.empty()) throw std::invalid_argument("gravity needs weights");
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("vertex weights must be finite and >= 0");
  }
  DemandSpec d;
  d.kind = Kind::Gravitational;
  d.mean = nominal_mean.value_or(
      std::accumulate(weights.begin(), weights.end(), 0.0) /
      static_cast<double>(weights.size()));
  d.vertex_weights = std::move(weights);
  return d;
}

DemandSpec DemandSpec::gravitational_exponential(std::size_t n, double mean,
                                                 std::uint64_t seed) {
  if (!(mean > 0.0)) throw std::invalid_argument("demand mean must be positive");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = -std::log(unit_open(hash_key(seed, i, 0, 0xd3a4))) * mean;
  auto d = gravitational(std::move(w), mean);
  d.seed = seed;
  return d;
}

double DemandSpec::demand(Vertex i, Vertex j) const {
  switch (kind) {
    case Kind::Uniform: return 1.0;
    case Kind::IidPairs:
      return -std::log(unit_open(hash_key(seed, i, j, 0xd1d))) * mean;
    case Kind::Gravitational:
      return vertex_weights.at(i) * vertex_weights.at(j);
  }
  return 1.0;
}

double DemandSpec::threshold_scale() const noexcept {
  switch (kind) {
    case Kind::Uniform: return 1.0;
    case Kind::IidPairs: return mean;
    case Kind::Gravitational: return mean * mean;
  }
  return 1.0;
}

// ------------------------------------------------------------- flow table

FlowTable::FlowTable(std::size_t n, bool weighted)
    : n_(n), counts_(n * n, 0), volume_(weighted ? n * n : 0, 0.0) {}

std::uint64_t FlowTable::total_count() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

double DistanceStats::mean_distance() const noexcept {
  const auto nn = static_cast<double>(n);
  return n == 0 ? 0.0 : distance_sum / (nn * nn);
}

double DistanceStats::mean_hops() const noexcept {
  const auto nn = static_cast<double>(n);
  return n < 2 ? 0.0 : static_cast<double>(hop_sum) / (nn * (nn - 1.0));
}

std::vector<double> AllPairsResult::vertex_flows() const {
  std::vector<double> out(interior_counts.size());
  const auto n = static_cast<double>(interior_counts.size());
  for (std::size_t v = 0; v < out.size(); ++v)
    out[v] = static_cast<double>(interior_counts[v]) / n;
  return out;
}

namespace {

struct SourceWork {
  PercolationTree tree;
  std::vector<std::uint32_t> kept;   // truncated subtree counts
  std::vector<double> weighted;      // demand-weighted subtree sums
  long double dist_sum = 0;
  std::uint64_t hop_sum = 0;
  double max_dist = 0;
};

void process_source(const DenseLengths& lengths, Vertex s, double threshold,
                    bool truncate, const DemandSpec& demands, SourceWork& w) {
  w.tree = shortest_path_tree(lengths, s);
  const auto& t = w.tree;
  const std::size_t n = t.size();
  w.kept.assign(n, 0);
  w.dist_sum = 0;
  w.hop_sum = 0;
  w.max_dist = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == s) continue;
    w.dist_sum += t.dist[v];
    w.hop_sum += t.hops[v];
    w.max_dist = std::max(w.max_dist, t.dist[v]);
  }
  const bool weighted = !demands.is_uniform();
  if (weighted) w.weighted.assign(n, 0.0);
  for (std::size_t k = n; k-- > 1;) {
    const Vertex v = t.order[k];
    const bool keep = !truncate || t.dist[v] <= threshold;
    w.kept[v] += keep ? 1u : 0u;
    if (weighted && keep) w.weighted[v] += demands.demand(s, v);
    const auto p = static_cast<Vertex>(t.parent[v]);
    if (p != s) {
      w.kept[p] += w.kept[v];
      if (weighted) w.weighted[p] += w.weighted[v];
    }
  }
}

}  // namespace

AllPairsResult all_pairs_flows(const Network& net, const FlowOptions& opts) {
  const std::size_t n = net.size();
  const double bytes = static_cast<double>(n) * static_cast<double>(n) *
                       (sizeof(std::uint64_t) + 2 * sizeof(double));
  if (bytes > static_cast<double>(opts.memory_budget)) {
    throw ResourceLimitError("all-pairs flows for n=" + std::to_string(n) +
                             " exceed the memory budget of " +
                             std::to_string(opts.memory_budget) + " bytes");
  }
  const double log_n = std::log(static_cast<double>(n));
  if (opts.truncation && !(*opts.truncation > -log_n))
    throw std::invalid_argument("truncation B must exceed -log n");
  const bool truncate = opts.truncation && std::isfinite(*opts.truncation);
  const double threshold = truncate ? log_n + *opts.truncation : kInf;
  if (opts.demands.kind == DemandSpec::Kind::Gravitational &&
      opts.demands.vertex_weights.size() != n)
    throw std::invalid_argument("gravity weights must have one entry per vertex");

  const DenseLengths lengths(net);
  const bool weighted = !opts.demands.is_uniform();
  AllPairsResult result{FlowTable(n, weighted), DistanceStats{}, {}};
  result.distances.n = n;
  result.distances.per_source.reserve(n);
  result.interior_counts.assign(n, 0);
  auto counts = result.flows.raw_counts();
  auto volume = result.flows.raw_volume();
  long double dist_total = 0;

  // Fixed batches independent of the worker count; merged in source order.
  constexpr std::size_t kBatch = 32;
  std::vector<SourceWork> batch(std::min(kBatch, n));
  for (std::size_t first = 0; first < n; first += kBatch) {
    const std::size_t len = std::min(kBatch, n - first);
    parallel_for(len, opts.workers, [&](std::size_t i) {
      process_source(lengths, static_cast<Vertex>(first + i), threshold,
                     truncate, opts.demands, batch[i]);
    });
    for (std::size_t i = 0; i < len; ++i) {
      const SourceWork& w = batch[i];
      const Vertex s = w.tree.source;
      for (std::size_t k = 1; k < n; ++k) {
        const Vertex v = w.tree.order[k];
        const auto p = static_cast<Vertex>(w.tree.parent[v]);
        counts[p * n + v] += w.kept[v];
        if (weighted) volume[p * n + v] += w.weighted[v];
        result.interior_counts[v] += w.tree.subtree_size[v] - 1;
      }
      dist_total += w.dist_sum;
      result.distances.hop_sum += w.hop_sum;
      const auto others = static_cast<double>(n - 1);
      result.distances.per_source.push_back(
          {s, static_cast<double>(w.dist_sum / others), w.max_dist,
           static_cast<double>(w.hop_sum) / others});
    }
  }
  result.distances.distance_sum = static_cast<double>(dist_total);
  return result;
}

std::vector<double> vertex_flows(const Network& net,
                                 std::span<const PercolationTree> trees) {
  const std::size_t n = net.size();
  if (trees.size() != n)
    throw std::invalid_argument("vertex_flows needs one tree per source");
  std::vector<std::uint64_t> interior(n, 0);
  for (const auto& t : trees) {
    if (t.size() != n) throw std::invalid_argument("tree size mismatch");
    for (Vertex v = 0; v < n; ++v) {
      if (v != t.source) interior[v] += t.subtree_size[v] - 1;
    }
  }
  std::vector<double> out(n);
  for (std::size_t v = 0; v < n; ++v)
    out[v] = static_cast<double>(interior[v]) / static_cast<double>(n);
  return out;
}

std::vector<std::uint64_t> branch_counts(const PercolationTree& tree,
                                         std::size_t k) {
  const std::size_t n = tree.size();
  if (k < 1 || k > n)
    throw std::invalid_argument("branch_counts: k must be in [1, n]");
  // The first k wetted vertices form a subtree containing the source; each
  // destination's last wetted-set vertex is its deepest ancestor in it.
  std::vector<std::uint32_t> rank(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank[tree.order[r]] = static_cast<std::uint32_t>(r);
  std::vector<Vertex> exit_vertex(n);
  std::vector<std::uint64_t> y(k, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const Vertex v = tree.order[r];
    exit_vertex[v] = r < k ? v : exit_vertex[static_cast<Vertex>(tree.parent[v])];
    ++y[rank[exit_vertex[v]]];
  }
  return y;
}

double harmonic_number(std::size_t m) {
  double h = 0.0;
  for (std::size_t k = m; k >= 1; --k) h += 1.0 / static_cast<double>(k);
  return h;
}

double expected_pair_distance(std::size_t n) {
  if (n < 2) throw std::invalid_argument("expected_pair_distance: n >= 2");
  const auto nn = static_cast<double>(n);
  return nn * harmonic_number(n - 1) / (nn - 1.0);
}

double expected_average_distance(std::size_t n) {
  if (n < 2) throw std::invalid_argument("expected_average_distance: n >= 2");
  return harmonic_number(n - 1);
}

double sample_pair_distance(std::size_t n, Stream& rng) {
  if (n < 2) throw std::invalid_argument("sample_pair_distance: n >= 2");
  const auto nn = static_cast<double>(n);
  double t = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const auto kk = static_cast<double>(k);
    t += rng.exponential(kk * (nn - kk) / nn);
    if (rng.below(n - k) == 0) return t;
  }
  return t;
}

}  // namespace edgeflow
