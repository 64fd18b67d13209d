#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edgeflow {

using Vertex = std::uint32_t;

/// Raised when an instance would exceed a configured memory budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LengthModel {
  ExponentialMeanN,    // rate 1/n, the canonical scaling
  ExponentialMeanOne,
  UniformZeroOne,
  Fixture,             // injected lengths, no random model
};

std::string_view to_string(LengthModel model);
LengthModel parse_length_model(std::string_view name);

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{3} << 30;

/// Length of edge {i,j} under `model`, drawn from a stream keyed on
/// (seed, min(i,j), max(i,j)). Independent of generation order.
double draw_edge_length(LengthModel model, std::size_t n, std::uint64_t seed,
                        Vertex i, Vertex j);

/// Complete graph on n vertices with symmetric positive edge lengths stored
/// as a packed strict upper triangle. Immutable after construction.
class Network {
 public:
  static Network generate(std::size_t n, LengthModel model, std::uint64_t seed,
                          std::size_t memory_budget = kDefaultMemoryBudget);

  /// Injected lengths, row-major over pairs i<j: (0,1),(0,2),...,(n-2,n-1).
  static Network from_lengths(std::size_t n, std::vector<double> upper);

  /// Named hand-checkable instances ("hand3", "star<k>").
  static Network fixture(std::string_view name);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return lengths_.size(); }
  LengthModel model() const noexcept { return model_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// L_ij; throws std::invalid_argument on i == j or out of range.
  double length(Vertex i, Vertex j) const;
  double length_unchecked(Vertex i, Vertex j) const noexcept {
    return i < j ? lengths_[index(i, j)] : lengths_[index(j, i)];
  }
  std::span<const double> packed_lengths() const noexcept { return lengths_; }

  /// CSV form: "n,model,seed" header and values, then "i,j,length" rows at
  /// full precision. Reading back reproduces identical lengths.
  void write_csv(std::ostream& out) const;
  static Network read_csv(std::istream& in);

  bool operator==(const Network&) const = default;

 private:
  Network(std::size_t n, LengthModel model, std::uint64_t seed,
          std::vector<double> lengths)
      : n_(n), model_(model), seed_(seed), lengths_(std::move(lengths)) {}

  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  std::size_t n_ = 0;
  LengthModel model_ = LengthModel::Fixture;
  std::uint64_t seed_ = 0;
  std::vector<double> lengths_;
};

}  // namespace edgeflow
