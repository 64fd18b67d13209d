#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgeflow/randnet.hpp"

namespace edgeflow {

/// Invalid configuration; the message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& why)
      : std::invalid_argument(field + ": " + why), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  std::string command = "tails";
  std::size_t n = 1000;
  std::vector<std::uint64_t> seeds{1};
  LengthModel model = LengthModel::ExponentialMeanN;
  std::string fixture;  // "hand3", "star<k>" or empty
  double tau = 2.0;
  std::optional<double> truncation;
  std::vector<double> z_grid = default_grid();
  std::string demand = "uniform";  // uniform, iid-exp, gravity-exp, gravity-const
  double demand_mean = 1.0;
  std::size_t samples = 100000;
  double t = 1.0;           // yule, sizebias
  std::size_t k = 2;        // distance terminals
  std::size_t xi_terms = 40;
  std::size_t path_length = 100;
  double ell_max = 5.0;     // psi window
  std::string check = "all";  // limits: g, mellin, cox, xi, all
  double y = 1.5;
  std::optional<double> tolerance;
  bool correlate = false;   // local: also compute flows for the phi/flow correlation
  std::string input;        // compare: tail CSV
  std::string reference;    // compare: optional limit CSV on the same grid
  std::string output_dir = ".";
  unsigned workers = 1;

  static std::vector<double> default_grid();
  bool operator==(const ExperimentConfig&) const = default;
};

inline const std::vector<std::string>& experiment_commands() {
  static const std::vector<std::string> names{
      "flows", "tails", "psi", "local", "vertexflows", "demands", "yule",
      "sizebias", "limits", "distances", "compare"};
  return names;
}

/// Sets one field from its key = value form. Keys match the long CLI flags;
/// "seeds" = N expands to 1..N, "seed-list" takes an explicit list, and
/// "z-grid" takes "default" or a comma-separated list.
void set_field(ExperimentConfig& cfg, std::string_view key, std::string_view value);
/// Lines "key = value"; '#' starts a comment.
ExperimentConfig parse_config_text(std::string_view text);
std::string to_config_text(const ExperimentConfig& cfg);
/// Throws ConfigError.
void validate(const ExperimentConfig& cfg);

struct RunOutcome {
  int exit_code = 0;                // 0 ok, 1 tolerance exceeded
  std::string summary_json;
  std::vector<std::string> artifacts;  // paths written
};

/// Writes CSV artifacts and "<command>_summary.json" into cfg.output_dir.
RunOutcome run_experiment(const ExperimentConfig& cfg);

struct TailComparison {
  std::vector<double> zs;
  std::vector<double> observed;
  std::vector<double> limit;
  double sup_error = 0.0;
};

/// Reads a CSV with columns "z" and "G_hat" (or, for a reference table,
/// "G"); compares against `limit`.
TailComparison compare_tail_csv(std::istream& tails,
                                const std::function<double(double)>& limit);
/// Two tables; throws std::invalid_argument when the z grids differ.
TailComparison compare_tail_csv(std::istream& tails, std::istream& reference);

}  // namespace edgeflow
