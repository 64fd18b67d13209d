#include "edgeflow/randnet.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "edgeflow/rng.hpp"

namespace edgeflow {

std::string_view to_string(LengthModel model) {
  switch (model) {
    case LengthModel::ExponentialMeanN: return "exp-mean-n";
    case LengthModel::ExponentialMeanOne: return "exp-mean-one";
    case LengthModel::UniformZeroOne: return "uniform";
    case LengthModel::Fixture: return "fixture";
  }
  return "unknown";
}

LengthModel parse_length_model(std::string_view name) {
  for (auto m : {LengthModel::ExponentialMeanN, LengthModel::ExponentialMeanOne,
                 LengthModel::UniformZeroOne, LengthModel::Fixture}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown length model: " + std::string(name));
}

double draw_edge_length(LengthModel model, std::size_t n, std::uint64_t seed,
                        Vertex i, Vertex j) {
  const Vertex lo = std::min(i, j);
  const Vertex hi = std::max(i, j);
  const double u = unit_open(hash_key(seed, lo, hi, 0xed9e));
  switch (model) {
    case LengthModel::ExponentialMeanN:
      return -std::log(u) * static_cast<double>(n);
    case LengthModel::ExponentialMeanOne:
      return -std::log(u);
    case LengthModel::UniformZeroOne:
      return u;
    case LengthModel::Fixture:
      break;
  }
  throw std::invalid_argument("draw_edge_length: fixture model has no draws");
}

Network Network::generate(std::size_t n, LengthModel model, std::uint64_t seed,
                          std::size_t memory_budget) {
  if (n < 2) throw std::invalid_argument("network needs n >= 2");
  if (model == LengthModel::Fixture)
    throw std::invalid_argument("fixture networks are built from lengths");
  const double edges = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  if (edges * sizeof(double) > static_cast<double>(memory_budget)) {
    throw ResourceLimitError("network with n=" + std::to_string(n) +
                             " needs more than the memory budget of " +
                             std::to_string(memory_budget) + " bytes");
  }
  std::vector<double> lengths(n * (n - 1) / 2);
  std::size_t k = 0;
  for (Vertex i = 0; i + 1 < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      lengths[k++] = draw_edge_length(model, n, seed, i, j);
    }
  }
  return Network(n, model, seed, std::move(lengths));
}

Network Network::from_lengths(std::size_t n, std::vector<double> upper) {
  if (n < 2) throw std::invalid_argument("network needs n >= 2");
  if (upper.size() != n * (n - 1) / 2)
    throw std::invalid_argument("fixture needs n(n-1)/2 lengths");
  for (double x : upper) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::invalid_argument("edge lengths must be positive and finite");
  }
  return Network(n, LengthModel::Fixture, 0, std::move(upper));
}

Network Network::fixture(std::string_view name) {
  if (name == "hand3") {
    // L01 = 1, L02 = 4, L12 = 2
    return from_lengths(3, {1.0, 4.0, 2.0});
  }
  if (name.starts_with("star")) {
    std::size_t n = 0;
    const auto digits = name.substr(4);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 2)
      throw std::invalid_argument("star fixture needs a size, e.g. star6");
    // Centre 0; spokes ~1e-3, leaf-leaf edges ~1, all distinct.
    std::vector<double> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (i == 0) {
          upper.push_back(1e-3 * (1.0 + 1e-3 * static_cast<double>(j)));
        } else {
          upper.push_back(1.0 + 1e-4 * static_cast<double>(i * n + j));
        }
      }
    }
    return from_lengths(n, std::move(upper));
  }
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

double Network::length(Vertex i, Vertex j) const {
  if (i == j) throw std::invalid_argument("no self-loops: i == j");
  if (i >= n_ || j >= n_) throw std::invalid_argument("vertex out of range");
  return length_unchecked(i, j);
}

void Network::write_csv(std::ostream& out) const {
  out << "n,model,seed\n"
      << n_ << ',' << to_string(model_) << ',' << seed_ << '\n'
      << "i,j,length\n";
  char buf[64];
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", lengths_[k++]);
      out << i << ',' << j << ',' << buf << '\n';
    }
  }
}

Network Network::read_csv(std::istream& in) {
  std::string line;
  auto expect_line = [&](std::string_view what) {
    if (!std::getline(in, line))
      throw std::invalid_argument("network csv: missing " + std::string(what));
  };
  expect_line("header");
  if (line != "n,model,seed")
    throw std::invalid_argument("network csv: bad header '" + line + "'");
  expect_line("parameters");
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string model_name;
  {
    std::istringstream ss(line);
    std::string field;
    std::getline(ss, field, ',');
    n = std::stoull(field);
    std::getline(ss, model_name, ',');
    std::getline(ss, field, ',');
    seed = std::stoull(field);
  }
  const LengthModel model = parse_length_model(model_name);
  expect_line("row header");
  if (line != "i,j,length")
    throw std::invalid_argument("network csv: bad row header '" + line + "'");
  if (n < 2) throw std::invalid_argument("network csv: n < 2");
  std::vector<double> lengths(n * (n - 1) / 2, 0.0);
  std::vector<bool> seen(lengths.size(), false);
  Network shape(n, model, seed, {});
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b, c;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    std::size_t i = std::stoull(a), j = std::stoull(b);
    if (i == j || i >= n || j >= n)
      throw std::invalid_argument("network csv: bad edge " + line);
    if (i > j) std::swap(i, j);
    const std::size_t k = shape.index(i, j);
    lengths[k] = std::strtod(c.c_str(), nullptr);
    seen[k] = true;
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("network csv: missing edges");
  }
  for (double x : lengths) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::invalid_argument("network csv: nonpositive length");
  }
  return Network(n, model, seed, std::move(lengths));
}

}  // namespace edgeflow
