// edgeflow: run one experiment and write its CSV/JSON artifacts.
//
//   edgeflow tails --n 1000 --seeds 10 --z-grid default
//   edgeflow flows --n 3 --fixture hand3
//   edgeflow limits --check mellin --y 1.5
//
// Exit status: 0 success, 1 tolerance exceeded, 2 usage or resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "edgeflow/experiment.hpp"

namespace {

constexpr int kUsageError = 2;

struct KeySpec {
  const char* key;
  const char* help;
};

constexpr KeySpec kKeys[] = {
    {"n", "number of vertices"},
    {"seeds", "use seeds 1..N"},
    {"seed-list", "explicit comma-separated seeds"},
    {"model", "exp-mean-n, exp-mean-one or uniform"},
    {"fixture", "hand3 or star<k> instead of a random network"},
    {"tau", "neighborhood radius"},
    {"truncation", "B: drop pairs farther apart than log n + B"},
    {"z-grid", "'default' or comma-separated ascending z values"},
    {"demand", "uniform, iid-exp, gravity-exp or gravity-const"},
    {"demand-mean", "mean demand weight mu"},
    {"samples", "Monte Carlo replicas or sample size"},
    {"t", "time for yule and sizebias"},
    {"k", "number of terminals for distance limits"},
    {"xi-terms", "Poisson points kept in the Xi sampler"},
    {"path-length", "jumps in the dumped Yule path"},
    {"ell-max", "length window for psi"},
    {"check", "limits: g, mellin, cox, xi or all"},
    {"y", "Mellin exponent in (0.5, 3)"},
    {"tolerance", "gate for the command's headline error"},
    {"input", "compare: tail CSV"},
    {"reference", "compare: limit CSV on the same grid"},
    {"output-dir", "artifact directory (default $EDGEFLOW_OUTPUT_DIR or .)"},
    {"workers", "worker threads"},
};

std::string commands_help() {
  std::string s;
  for (const auto& c : edgeflow::experiment_commands()) s += (s.empty() ? "" : ", ") + c;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest-path flow experiments on the complete graph with random edge lengths"};
  app.set_version_flag("--version", std::string(EDGEFLOW_VERSION));

  std::string command;
  std::string config_path;
  bool correlate = false;
  std::map<std::string, std::string> raw;
  app.add_option("command", command, "one of: " + commands_help())->required();
  app.add_option("--config", config_path, "key = value configuration file");
  for (const auto& k : kKeys) app.add_option(std::string("--") + k.key, raw[k.key], k.help);
  auto* correlate_flag =
      app.add_flag("--correlate", correlate, "local: correlate phi with computed flows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    edgeflow::ExperimentConfig cfg;
    if (const char* dir = std::getenv("EDGEFLOW_OUTPUT_DIR"); dir && *dir) cfg.output_dir = dir;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw edgeflow::ConfigError("config", "cannot read " + config_path);
      std::stringstream text;
      text << in.rdbuf();
      const auto from_file = edgeflow::parse_config_text(text.str());
      const auto env_dir = cfg.output_dir;
      cfg = from_file;
      if (text.str().find("output-dir") == std::string::npos) cfg.output_dir = env_dir;
    }
    edgeflow::set_field(cfg, "command", command);
    for (const auto& k : kKeys) {
      if (app.get_option(std::string("--") + k.key)->count() > 0)
        edgeflow::set_field(cfg, k.key, raw[k.key]);
    }
    if (correlate_flag->count() > 0) cfg.correlate = correlate;
    if (!cfg.fixture.empty() && app.get_option("--model")->count() == 0)
      cfg.model = edgeflow::LengthModel::Fixture;

    const auto outcome = edgeflow::run_experiment(cfg);
    std::cout << outcome.summary_json << '\n';
    for (const auto& path : outcome.artifacts) std::cerr << "wrote " << path << '\n';
    return outcome.exit_code;
  } catch (const edgeflow::ConfigError& e) {
    std::cerr << "edgeflow: invalid configuration: " << e.what() << '\n';
    return kUsageError;
  } catch (const edgeflow::ResourceLimitError& e) {
    std::cerr << "edgeflow: resource limit: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "edgeflow: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "edgeflow: " << e.what() << '\n';
    return kUsageError;
  }
}
