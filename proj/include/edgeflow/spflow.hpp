#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgeflow/randnet.hpp"

namespace edgeflow {

class Stream;

inline constexpr std::int32_t kNoParent = -1;

/// Single-source shortest-path tree ("percolation tree"): the wetting order,
/// distances and subtree sizes of first-passage percolation from `source`.
struct PercolationTree {
  Vertex source = 0;
  std::vector<double> dist;
  std::vector<std::int32_t> parent;  // kNoParent at the source
  std::vector<Vertex> order;         // wetting order; order[0] == source
  std::vector<std::uint32_t> subtree_size;
  std::vector<std::uint32_t> hops;

  std::size_t size() const noexcept { return dist.size(); }
  /// N_n(t): vertices within distance t of the source, source included.
  std::size_t wetted_within(double t) const noexcept;
};

/// Row-major square copy of a network's lengths; the all-pairs scans read
/// whole rows, which the packed triangle cannot serve contiguously.
class DenseLengths {
 public:
  explicit DenseLengths(const Network& net);
  std::size_t size() const noexcept { return n_; }
  const double* row(Vertex u) const noexcept { return data_.data() + u * n_; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// O(n^2) array-frontier scan. Exact float ties settle the smaller vertex
/// first and take the smaller-index parent.
PercolationTree shortest_path_tree(const Network& net, Vertex source);
PercolationTree shortest_path_tree(const DenseLengths& lengths, Vertex source);
/// Binary-heap variant with the same tie rules; must agree exactly.
PercolationTree shortest_path_tree_heap(const Network& net, Vertex source);

/// Vertices within `radius` of `source` (source first), in wetting order.
std::vector<std::pair<Vertex, double>> truncated_distances(const Network& net,
                                                           Vertex source,
                                                           double radius);

struct EdgeCount {
  Vertex from;
  Vertex to;
  std::uint64_t count;
};

/// Routed-pair counts from one source: tree edge parent(v) -> v carries
/// subtree_size[v]; every other edge carries nothing.
std::vector<EdgeCount> subtree_flow(const PercolationTree& tree);

/// Source-destination demand model.
struct DemandSpec {
  enum class Kind { Uniform, IidPairs, Gravitational };

  Kind kind = Kind::Uniform;
  double mean = 1.0;               // mu; nominal mean of a vertex weight for gravity
  std::uint64_t seed = 0;          // IidPairs stream
  std::vector<double> vertex_weights;

  static DemandSpec uniform() { return {}; }
  /// D_ij ~ Exponential(mean) per ordered pair, keyed by (seed, i, j).
  static DemandSpec iid_pairs(double mean, std::uint64_t seed);
  /// D_ij = w_i w_j; `nominal_mean` defaults to the sample mean of weights.
  static DemandSpec gravitational(std::vector<double> weights,
                                  std::optional<double> nominal_mean = {});
  /// Gravity with w_i ~ Exponential(mean) keyed by (seed, i).
  static DemandSpec gravitational_exponential(std::size_t n, double mean,
                                              std::uint64_t seed);

  bool is_uniform() const noexcept { return kind == Kind::Uniform; }
  double demand(Vertex i, Vertex j) const;
  /// Threshold multiplier for tail curves: 1, mu, or mu^2.
  double threshold_scale() const noexcept;
};

/// Per-directed-edge routed-pair counts (exact integers) and, for weighted
/// demands, the demand volume. flow(e) = volume(e) / n.
class FlowTable {
 public:
  FlowTable() = default;
  FlowTable(std::size_t n, bool weighted);

  std::size_t size() const noexcept { return n_; }
  bool weighted() const noexcept { return !volume_.empty(); }

  std::uint64_t count(Vertex u, Vertex v) const noexcept { return counts_[u * n_ + v]; }
  double volume(Vertex u, Vertex v) const noexcept {
    return weighted() ? volume_[u * n_ + v] : static_cast<double>(count(u, v));
  }
  double flow(Vertex u, Vertex v) const noexcept {
    return volume(u, v) / static_cast<double>(n_);
  }
  std::uint64_t total_count() const noexcept;
  /// The same routed-pair counts with the demand volumes dropped.
  FlowTable unweighted() const {
    FlowTable t;
    t.n_ = n_;
    t.counts_ = counts_;
    return t;
  }

  std::span<std::uint64_t> raw_counts() noexcept { return counts_; }
  std::span<double> raw_volume() noexcept { return volume_; }

  bool operator==(const FlowTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> counts_;
  std::vector<double> volume_;
};

struct SourceSummary {
  Vertex source;
  double mean_dist;
  double max_dist;
  double mean_hops;
};

struct DistanceStats {
  std::size_t n = 0;
  double distance_sum = 0.0;  // sum over ordered pairs i != j of D(i,j)
  std::uint64_t hop_sum = 0;
  std::vector<SourceSummary> per_source;

  /// n^-2 sum_{i != j} D(i,j)
  double mean_distance() const noexcept;
  /// Average hop count over ordered pairs.
  double mean_hops() const noexcept;
};

struct FlowOptions {
  /// Drop pairs with D(i,j) > log n + B.
  std::optional<double> truncation;
  DemandSpec demands = DemandSpec::uniform();
  unsigned workers = 1;
  std::size_t memory_budget = kDefaultMemoryBudget;
};

struct AllPairsResult {
  FlowTable flows;
  DistanceStats distances;
  /// Per vertex: ordered pairs with the vertex strictly interior to the path.
  std::vector<std::uint64_t> interior_counts;

  /// F*_n(v) = interior_counts[v] / n
  std::vector<double> vertex_flows() const;
};

/// All sources, merged in source order so results do not depend on the
/// number of workers.
AllPairsResult all_pairs_flows(const Network& net, const FlowOptions& opts = {});

/// F*_n(v) from a full set of per-source trees (one per source).
std::vector<double> vertex_flows(const Network& net,
                                 std::span<const PercolationTree> trees);

/// Y(v) for the first k wetted vertices (in wetting order): destinations
/// whose path from the source leaves the wetted set last at v.
std::vector<std::uint64_t> branch_counts(const PercolationTree& tree,
                                         std::size_t k);

/// H_m = 1 + 1/2 + ... + 1/m
double harmonic_number(std::size_t m);
/// E D(1,2) = n H_{n-1} / (n-1) under ExponentialMeanN lengths.
double expected_pair_distance(std::size_t n);
/// E n^-2 sum D(i,j) = H_{n-1}.
double expected_average_distance(std::size_t n);

/// Exact draw of D(1,2) in G_n by lazy exploration from vertex 1: with k
/// vertices wetted, the next wetting happens after Exponential(k(n-k)/n)
/// and hits a uniform unwetted vertex (memorylessness of the lengths).
double sample_pair_distance(std::size_t n, Stream& rng);

}  // namespace edgeflow
