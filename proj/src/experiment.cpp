#include "edgeflow/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "edgeflow/branching.hpp"
#include "edgeflow/empirics.hpp"
#include "edgeflow/limitlaws.hpp"
#include "edgeflow/localview.hpp"
#include "edgeflow/parallel.hpp"
#include "edgeflow/rng.hpp"
#include "edgeflow/spflow.hpp"
#include "edgeflow/stats.hpp"

namespace edgeflow {

using json = nlohmann::ordered_json;

std::vector<double> ExperimentConfig::default_grid() { return default_z_grid(); }

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(const std::string& field, std::string_view v) {
  const std::string s = trim(v);
  double x = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError(field, "expected a number, got '" + s + "'");
  return x;
}

std::uint64_t to_uint(const std::string& field, std::string_view v) {
  const std::string s = trim(v);
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError(field, "expected a non-negative integer, got '" + s + "'");
  return x;
}

bool to_bool(const std::string& field, std::string_view v) {
  const std::string s = trim(v);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError(field, "expected true or false, got '" + s + "'");
}

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) out += exact(xs[i]);
    else out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

void set_field(ExperimentConfig& c, std::string_view key_view, std::string_view value) {
  const std::string key(key_view);
  const std::string v = trim(value);
  if (key == "command") c.command = v;
  else if (key == "n") c.n = to_uint(key, v);
  else if (key == "seeds") {
    const auto count = to_uint(key, v);
    if (count < 1) throw ConfigError(key, "need at least one seed");
    c.seeds.clear();
    for (std::uint64_t s = 1; s <= count; ++s) c.seeds.push_back(s);
  } else if (key == "seed-list") {
    c.seeds.clear();
    for (const auto& s : split(v, ',')) c.seeds.push_back(to_uint(key, s));
  } else if (key == "model") {
    try {
      c.model = parse_length_model(v);
    } catch (const std::invalid_argument&) {
      throw ConfigError(key, "unknown length model '" + v + "'");
    }
  } else if (key == "fixture") c.fixture = v;
  else if (key == "tau") c.tau = to_double(key, v);
  else if (key == "truncation") {
    if (v.empty() || v == "none") c.truncation.reset();
    else c.truncation = to_double(key, v);
  } else if (key == "z-grid") {
    if (v == "default") c.z_grid = default_z_grid();
    else {
      c.z_grid.clear();
      for (const auto& s : split(v, ',')) c.z_grid.push_back(to_double(key, s));
    }
  } else if (key == "demand") c.demand = v;
  else if (key == "demand-mean") c.demand_mean = to_double(key, v);
  else if (key == "samples") c.samples = to_uint(key, v);
  else if (key == "t") c.t = to_double(key, v);
  else if (key == "k") c.k = to_uint(key, v);
  else if (key == "xi-terms") c.xi_terms = to_uint(key, v);
  else if (key == "path-length") c.path_length = to_uint(key, v);
  else if (key == "ell-max") c.ell_max = to_double(key, v);
  else if (key == "check") c.check = v;
  else if (key == "y") c.y = to_double(key, v);
  else if (key == "tolerance") {
    if (v.empty() || v == "none") c.tolerance.reset();
    else c.tolerance = to_double(key, v);
  } else if (key == "correlate") c.correlate = to_bool(key, v);
  else if (key == "input") c.input = v;
  else if (key == "reference") c.reference = v;
  else if (key == "output-dir") c.output_dir = v;
  else if (key == "workers") c.workers = static_cast<unsigned>(to_uint(key, v));
  else throw ConfigError(key, "unknown configuration key");
}

ExperimentConfig parse_config_text(std::string_view text) {
  ExperimentConfig cfg;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    set_field(cfg, trim(std::string_view(line).substr(0, eq)),
              std::string_view(line).substr(eq + 1));
  }
  return cfg;
}

std::string to_config_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "command = " << c.command << '\n'
      << "n = " << c.n << '\n'
      << "seed-list = " << join(c.seeds) << '\n'
      << "model = " << to_string(c.model) << '\n';
  if (!c.fixture.empty()) out << "fixture = " << c.fixture << '\n';
  out << "tau = " << exact(c.tau) << '\n';
  if (c.truncation) out << "truncation = " << exact(*c.truncation) << '\n';
  out << "z-grid = " << join(c.z_grid) << '\n'
      << "demand = " << c.demand << '\n'
      << "demand-mean = " << exact(c.demand_mean) << '\n'
      << "samples = " << c.samples << '\n'
      << "t = " << exact(c.t) << '\n'
      << "k = " << c.k << '\n'
      << "xi-terms = " << c.xi_terms << '\n'
      << "path-length = " << c.path_length << '\n'
      << "ell-max = " << exact(c.ell_max) << '\n'
      << "check = " << c.check << '\n'
      << "y = " << exact(c.y) << '\n';
  if (c.tolerance) out << "tolerance = " << exact(*c.tolerance) << '\n';
  out << "correlate = " << (c.correlate ? "true" : "false") << '\n';
  if (!c.input.empty()) out << "input = " << c.input << '\n';
  if (!c.reference.empty()) out << "reference = " << c.reference << '\n';
  out << "output-dir = " << c.output_dir << '\n'
      << "workers = " << c.workers << '\n';
  return out.str();
}

void validate(const ExperimentConfig& c) {
  const auto& cmds = experiment_commands();
  if (std::find(cmds.begin(), cmds.end(), c.command) == cmds.end())
    throw ConfigError("command", "unknown command '" + c.command + "'");
  if (c.n < 2) throw ConfigError("n", "must be at least 2");
  if (c.seeds.empty()) throw ConfigError("seeds", "need at least one seed");
  if (!c.fixture.empty() && c.fixture != "hand3" &&
      !(c.fixture.rfind("star", 0) == 0 && c.fixture.size() > 4))
    throw ConfigError("fixture", "expected hand3 or star<k>");
  if (c.model == LengthModel::Fixture && c.fixture.empty())
    throw ConfigError("model", "the fixture model needs --fixture");
  if (!(c.tau > 0.0) || !std::isfinite(c.tau)) throw ConfigError("tau", "must be positive");
  if (c.truncation && !std::isfinite(*c.truncation))
    throw ConfigError("truncation", "must be finite");
  if (c.z_grid.empty()) throw ConfigError("z-grid", "must not be empty");
  for (std::size_t i = 0; i < c.z_grid.size(); ++i) {
    if (!(c.z_grid[i] > 0.0)) throw ConfigError("z-grid", "values must be positive");
    if (i && !(c.z_grid[i] > c.z_grid[i - 1]))
      throw ConfigError("z-grid", "values must be strictly ascending");
  }
  if (c.demand != "uniform" && c.demand != "iid-exp" && c.demand != "gravity-exp" &&
      c.demand != "gravity-const")
    throw ConfigError("demand", "expected uniform, iid-exp, gravity-exp or gravity-const");
  if (!(c.demand_mean > 0.0)) throw ConfigError("demand-mean", "must be positive");
  if (c.samples < 1) throw ConfigError("samples", "must be at least 1");
  if (!(c.t >= 0.0) || c.t > 40.0) throw ConfigError("t", "must lie in [0, 40]");
  if (c.k < 2) throw ConfigError("k", "must be at least 2");
  if (c.xi_terms < 2) throw ConfigError("xi-terms", "must be at least 2");
  if (c.path_length < 1) throw ConfigError("path-length", "must be at least 1");
  if (!(c.ell_max > 0.0)) throw ConfigError("ell-max", "must be positive");
  if (c.check != "g" && c.check != "mellin" && c.check != "cox" && c.check != "xi" &&
      c.check != "all")
    throw ConfigError("check", "expected g, mellin, cox, xi or all");
  if (!(c.y > 0.5 && c.y < 3.0)) throw ConfigError("y", "must lie in (0.5, 3)");
  if (c.tolerance && !(*c.tolerance >= 0.0)) throw ConfigError("tolerance", "must be >= 0");
  if (c.command == "compare" && c.input.empty())
    throw ConfigError("input", "compare needs a tail CSV");
  if (c.workers < 1 || c.workers > 256) throw ConfigError("workers", "must lie in [1, 256]");
  if (c.output_dir.empty()) throw ConfigError("output-dir", "must not be empty");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::map<std::string, double>> read_csv_rows(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV input");
  const auto header = split(line, ',');
  std::vector<std::map<std::string, double>> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size())
      throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) +
                                  " cells, header has " + std::to_string(header.size()));
    std::map<std::string, double> row;
    for (std::size_t i = 0; i < cells.size(); ++i) row[header[i]] = to_double(header[i], cells[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

double column(const std::map<std::string, double>& row,
              std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (auto it = row.find(name); it != row.end()) return it->second;
  }
  throw std::invalid_argument(std::string("CSV lacks column ") + *names.begin());
}

}  // namespace

TailComparison compare_tail_csv(std::istream& tails,
                                const std::function<double(double)>& limit) {
  TailComparison r;
  for (const auto& row : read_csv_rows(tails)) {
    const double z = column(row, {"z"});
    r.zs.push_back(z);
    r.observed.push_back(column(row, {"G_hat", "G"}));
    r.limit.push_back(limit(z));
    r.sup_error = std::max(r.sup_error, std::abs(r.observed.back() - r.limit.back()));
  }
  return r;
}

TailComparison compare_tail_csv(std::istream& tails, std::istream& reference) {
  const auto a = read_csv_rows(tails);
  const auto b = read_csv_rows(reference);
  if (a.size() != b.size()) throw std::invalid_argument("z grids differ in length");
  TailComparison r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double z = column(a[i], {"z"});
    if (z != column(b[i], {"z"}))
      throw std::invalid_argument("z grids differ at row " + std::to_string(i + 1));
    r.zs.push_back(z);
    r.observed.push_back(column(a[i], {"G_hat", "G"}));
    r.limit.push_back(column(b[i], {"G", "G_limit", "G_hat"}));
    r.sup_error = std::max(r.sup_error, std::abs(r.observed.back() - r.limit.back()));
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json stats_json(const RunningStats& s) {
  return {{"mean", s.mean()}, {"standard_error", s.standard_error()}, {"count", s.count()}};
}

class Runner {
 public:
  explicit Runner(const ExperimentConfig& cfg) : cfg_(cfg) {
    std::filesystem::create_directories(cfg.output_dir);
    summary_["command"] = cfg.command;
    summary_["version"] = EDGEFLOW_VERSION;
    json config;
    for (const auto& line : split(to_config_text(cfg), '\n')) {
      const auto eq = line.find('=');
      if (eq != std::string::npos) config[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    summary_["config"] = config;
    summary_["seeds"] = cfg.seeds;
    summary_["per_seed"] = json::array();
    summary_["aggregate"] = json::object();
    summary_["timings"] = json::object();
  }

  RunOutcome run() {
    const auto start = Clock::now();
    const auto& c = cfg_.command;
    if (c == "flows") flows();
    else if (c == "tails") tails();
    else if (c == "psi") psi();
    else if (c == "local") local();
    else if (c == "vertexflows") vertexflows();
    else if (c == "demands") demands();
    else if (c == "yule") yule();
    else if (c == "sizebias") sizebias();
    else if (c == "limits") limits();
    else if (c == "distances") distances();
    else if (c == "compare") compare();
    summary_["timings"]["total_seconds"] = seconds_since(start);
    summary_["exit_code"] = outcome_.exit_code;
    outcome_.summary_json = summary_.dump(2);
    const auto path = out_path(cfg_.command + "_summary.json");
    std::ofstream(path) << outcome_.summary_json << '\n';
    outcome_.artifacts.push_back(path);
    return outcome_;
  }

 private:
  std::string out_path(const std::string& name) const {
    return (std::filesystem::path(cfg_.output_dir) / name).string();
  }

  template <class Fn>
  void write(const std::string& name, Fn&& fn) {
    const auto path = out_path(name);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    fn(out);
    outcome_.artifacts.push_back(path);
  }

  void gate(const std::string& what, double error, double default_tol) {
    const double tol = cfg_.tolerance.value_or(default_tol);
    summary_["aggregate"]["gate_" + what] = {{"error", error}, {"tolerance", tol}};
    if (!(error <= tol)) outcome_.exit_code = 1;
  }

  Network network(std::uint64_t seed) const {
    if (!cfg_.fixture.empty()) return Network::fixture(cfg_.fixture);
    return Network::generate(cfg_.n, cfg_.model, seed);
  }

  DemandSpec demand_spec(std::uint64_t seed, std::size_t n) const {
    if (cfg_.demand == "iid-exp") return DemandSpec::iid_pairs(cfg_.demand_mean, seed);
    if (cfg_.demand == "gravity-exp")
      return DemandSpec::gravitational_exponential(n, cfg_.demand_mean, seed);
    if (cfg_.demand == "gravity-const")
      return DemandSpec::gravitational(std::vector<double>(n, cfg_.demand_mean),
                                       cfg_.demand_mean);
    return DemandSpec::uniform();
  }

  FlowOptions flow_options(const DemandSpec& d = DemandSpec::uniform()) const {
    FlowOptions o;
    o.truncation = cfg_.truncation;
    o.demands = d;
    o.workers = cfg_.workers;
    return o;
  }

  std::string label(std::uint64_t seed) const {
    return cfg_.fixture.empty() ? "seed" + std::to_string(seed) : cfg_.fixture;
  }

  std::vector<std::uint64_t> run_seeds() const {
    if (!cfg_.fixture.empty()) return {cfg_.seeds.front()};
    return cfg_.seeds;
  }

  /// Per-seed tail curves and their pointwise mean.
  struct CurveSet {
    std::vector<TailCurve> curves;
    std::vector<RunningStats> pointwise;
  };

  void add_curve(CurveSet& set, TailCurve curve) const {
    if (set.pointwise.empty()) set.pointwise.resize(curve.values.size());
    for (std::size_t i = 0; i < curve.values.size(); ++i) set.pointwise[i].add(curve.values[i]);
    set.curves.push_back(std::move(curve));
  }

  void flows() {
    RunningStats gap;
    for (auto seed : run_seeds()) {
      const auto t0 = Clock::now();
      const auto net = network(seed);
      const auto r = all_pairs_flows(net, flow_options());
      const auto id = flow_length_identity(net, r.flows, r.distances);
      const auto vf = r.vertex_flows();
      const std::string tag = label(seed);
      write("flows_" + tag + ".csv", [&](auto& o) { write_flow_table(o, net, r.flows); });
      write("distances_" + tag + ".csv",
            [&](auto& o) { write_distance_summary(o, r.distances); });
      write("vertexflows_" + tag + ".csv", [&](auto& o) {
        o << "v,vertex_flow\n";
        for (std::size_t v = 0; v < vf.size(); ++v) o << v << ',' << format_number(vf[v]) << '\n';
      });
      json row{{"seed", seed},
               {"label", tag},
               {"n", net.size()},
               {"identity_lhs", id.lhs},
               {"identity_rhs", id.rhs},
               {"identity_relative_gap", id.relative_gap},
               {"mean_distance", r.distances.mean_distance()},
               {"mean_hops", r.distances.mean_hops()},
               {"routed_pairs", r.flows.total_count()}};
      if (net.model() == LengthModel::ExponentialMeanN)
        row["expected_mean_distance"] = expected_average_distance(net.size());
      summary_["per_seed"].push_back(row);
      summary_["timings"]["seed_" + tag] = seconds_since(t0);
      if (!cfg_.truncation) gap.add(id.relative_gap);
    }
    if (gap.count()) {
      summary_["aggregate"]["identity_relative_gap"] = stats_json(gap);
      double worst = 0.0;
      for (const auto& row : summary_["per_seed"])
        worst = std::max(worst, row["identity_relative_gap"].get<double>());
      gate("identity", worst, 1e-9);
    }
  }

  void write_curve_set(const std::string& prefix, const CurveSet& set) {
    const auto G = [](double z) { return flow_tail_limit(z); };
    for (std::size_t i = 0; i < set.curves.size(); ++i) {
      write(prefix + "_" + label(cfg_.seeds[i]) + ".csv",
            [&](auto& o) { write_tail_comparison(o, set.curves[i], G); });
    }
    TailCurve mean;
    mean.zs = cfg_.z_grid;
    for (const auto& s : set.pointwise) mean.values.push_back(s.mean());
    write(prefix + ".csv", [&](auto& o) { write_tail_comparison(o, mean, G); });
    json points = json::array();
    double sup = 0.0;
    for (std::size_t i = 0; i < mean.zs.size(); ++i) {
      const double g = flow_tail_limit(mean.zs[i]);
      sup = std::max(sup, std::abs(mean.values[i] - g));
      points.push_back({{"z", mean.zs[i]},
                        {"G_hat_mean", mean.values[i]},
                        {"standard_error", set.pointwise[i].standard_error()},
                        {"G", g}});
    }
    summary_["aggregate"]["pointwise"] = points;
    summary_["aggregate"]["sup_error"] = sup;
    if (cfg_.tolerance) gate("sup_error", sup, *cfg_.tolerance);
  }

  void tails() {
    CurveSet set;
    for (auto seed : run_seeds()) {
      const auto t0 = Clock::now();
      const auto net = network(seed);
      const auto d = demand_spec(seed, net.size());
      const auto r = all_pairs_flows(net, flow_options(d));
      auto curve = tail_curve(r.flows, cfg_.z_grid, d.threshold_scale());
      summary_["per_seed"].push_back({{"seed", seed}, {"G_hat", curve.values}});
      summary_["timings"]["seed_" + label(seed)] = seconds_since(t0);
      add_curve(set, std::move(curve));
    }
    write_curve_set("tails", set);
  }

  void psi() {
    const auto log_window = [&](double ell, double y) {
      return ell <= cfg_.ell_max ? y : 0.0;
    };
    RunningStats mass_above_one;
    RunningStats y_integral;
    for (auto seed : run_seeds()) {
      const auto net = network(seed);
      const auto r = all_pairs_flows(net, flow_options());
      const auto pts = psi_points(net, r.flows);
      write("psi_" + label(seed) + ".csv", [&](auto& o) { write_measure(o, pts); });
      const double above = measure_integral(
          pts, [&](double ell, double y) { return ell <= cfg_.ell_max && y > 1.0 ? 1.0 : 0.0; });
      const double yi = measure_integral(pts, log_window);
      mass_above_one.add(above);
      y_integral.add(yi);
      summary_["per_seed"].push_back(
          {{"seed", seed}, {"mass_y_above_1", above}, {"integral_y", yi}});
    }
    const auto limit = sample_psi(cfg_.ell_max, cfg_.samples, cfg_.seeds.front());
    write("psi_limit.csv", [&](auto& o) { write_measure(o, limit); });
    summary_["aggregate"]["mass_y_above_1"] = stats_json(mass_above_one);
    summary_["aggregate"]["integral_y"] = stats_json(y_integral);
    summary_["aggregate"]["limit_mass_y_above_1"] = measure_integral(
        limit, [](double, double y) { return y > 1.0 ? 1.0 : 0.0; });
    summary_["aggregate"]["limit_integral_y"] = 1.0 - std::exp(-cfg_.ell_max);
  }

  void local() {
    const double tau = cfg_.tau;
    RunningStats mass, ell_y, tree_fraction, corr;
    for (auto seed : run_seeds()) {
      const auto t0 = Clock::now();
      const auto net = network(seed);
      const auto edges = local_edges(net, tau, cfg_.workers);
      write("local_" + label(seed) + ".csv", [&](auto& o) { write_local_edges(o, edges); });
      const auto pts = phi_measure(edges, net.size());
      const double m = total_weight(pts);
      const double ly = measure_integral(pts, [](double ell, double y) { return ell * y; });
      std::size_t trees = 0;
      for (const auto& e : edges) trees += e.is_tree ? 1 : 0;
      const double frac = edges.empty() ? 1.0 : static_cast<double>(trees) / edges.size();
      mass.add(m);
      ell_y.add(ly);
      tree_fraction.add(frac);
      json row{{"seed", seed}, {"total_mass", m}, {"integral_ell_y", ly},
               {"tree_fraction", frac}, {"short_edges", edges.size()}};
      if (cfg_.correlate) {
        const auto r = all_pairs_flows(net, flow_options());
        const double rho = phi_flow_correlation(edges, r.flows);
        corr.add(rho);
        row["phi_flow_correlation"] = rho;
      }
      summary_["per_seed"].push_back(row);
      summary_["timings"]["seed_" + label(seed)] = seconds_since(t0);
    }
    write("phi_limit.csv", [&](auto& o) {
      write_measure(o, phi_limit_points(tau, cfg_.samples, cfg_.seeds.front()));
    });
    summary_["aggregate"]["total_mass"] = stats_json(mass);
    summary_["aggregate"]["total_mass_limit"] = tau;
    summary_["aggregate"]["integral_ell_y"] = stats_json(ell_y);
    summary_["aggregate"]["integral_ell_y_limit"] = 1.0 - (1.0 + tau) * std::exp(-tau);
    summary_["aggregate"]["tree_fraction"] = stats_json(tree_fraction);
    if (cfg_.correlate) summary_["aggregate"]["phi_flow_correlation"] = stats_json(corr);
  }

  void vertexflows() {
    RunningStats normalized;
    for (auto seed : run_seeds()) {
      const auto net = network(seed);
      const auto r = all_pairs_flows(net, flow_options());
      const auto vf = r.vertex_flows();
      write("vertexflows_" + label(seed) + ".csv", [&](auto& o) {
        o << "v,vertex_flow\n";
        for (std::size_t v = 0; v < vf.size(); ++v) o << v << ',' << format_number(vf[v]) << '\n';
      });
      const auto agg = vertex_flow_aggregate(vf, r.distances);
      const double log_n = std::log(static_cast<double>(net.size()));
      normalized.add(agg.from_vertex_flows / log_n);
      summary_["per_seed"].push_back({{"seed", seed},
                                      {"mean_vertex_flow_over_log_n", agg.from_vertex_flows / log_n},
                                      {"from_hops_over_log_n", agg.from_hops / log_n}});
    }
    summary_["aggregate"]["mean_vertex_flow_over_log_n"] = stats_json(normalized);
    const auto xi = sample_xi(cfg_.xi_terms, cfg_.samples, cfg_.seeds.front());
    summary_["aggregate"]["xi"] = stats_json(summarize(xi));
    summary_["aggregate"]["xi_truncation_bias"] = xi_truncation_bias(cfg_.xi_terms);
  }

  void demands() {
    CurveSet uniform_set;
    CurveSet demand_set;
    for (auto seed : run_seeds()) {
      const auto net = network(seed);
      const auto d = demand_spec(seed, net.size());
      const auto u = all_pairs_flows(net, flow_options());
      const auto w = all_pairs_flows(net, flow_options(d));
      auto cu = tail_curve(u.flows, cfg_.z_grid);
      auto cw = tail_curve(w.flows, cfg_.z_grid, d.threshold_scale());
      double sup = 0.0;
      for (std::size_t i = 0; i < cu.values.size(); ++i)
        sup = std::max(sup, std::abs(cu.values[i] - cw.values[i]));
      write("demands_" + label(seed) + ".csv", [&](auto& o) { write_pair(o, cu, cw); });
      summary_["per_seed"].push_back({{"seed", seed}, {"sup_difference", sup}});
      add_curve(uniform_set, std::move(cu));
      add_curve(demand_set, std::move(cw));
    }
    TailCurve mu, mw;
    mu.zs = mw.zs = cfg_.z_grid;
    for (const auto& s : uniform_set.pointwise) mu.values.push_back(s.mean());
    for (const auto& s : demand_set.pointwise) mw.values.push_back(s.mean());
    write("demands.csv", [&](auto& o) { write_pair(o, mu, mw); });
    double sup = 0.0;
    for (std::size_t i = 0; i < mu.values.size(); ++i)
      sup = std::max(sup, std::abs(mu.values[i] - mw.values[i]));
    summary_["aggregate"]["sup_difference"] = sup;
    if (cfg_.tolerance) gate("sup_difference", sup, *cfg_.tolerance);
  }

  static void write_pair(std::ostream& o, const TailCurve& u, const TailCurve& w) {
    o << "z,G_uniform,G_demand,abs_diff\n";
    for (std::size_t i = 0; i < u.zs.size(); ++i) {
      o << format_number(u.zs[i]) << ',' << format_number(u.values[i]) << ','
        << format_number(w.values[i]) << ','
        << format_number(std::abs(u.values[i] - w.values[i])) << '\n';
    }
  }

  template <class Draw>
  std::vector<std::uint64_t> replicas(std::uint64_t stream, Draw&& draw) const {
    std::vector<std::uint64_t> out(cfg_.samples);
    const auto seed = cfg_.seeds.front();
    parallel_for(out.size(), cfg_.workers, [&](std::size_t r) {
      Stream rng(hash_key(seed, stream, r));
      out[r] = draw(rng);
    });
    return out;
  }

  void yule() {
    const double t = cfg_.t;
    const auto counts = replicas(0x1, [&](Stream& rng) { return yule_population(t, rng); });
    RunningStats w;
    std::vector<double> ws;
    std::map<std::uint64_t, double> hist;
    for (auto c : counts) {
      const double x = std::exp(-t) * static_cast<double>(c);
      w.add(x);
      ws.push_back(x);
      hist[c] += 1.0;
    }
    // Cells k = 1..K-1 plus a tail cell k >= K, K chosen so every cell
    // expects at least five.
    const double total = static_cast<double>(counts.size());
    std::vector<double> observed;
    std::vector<double> expected;
    std::uint64_t k = 1;
    double tail = 1.0;
    while (total * yule_pmf(t, k) >= 5.0 && total * (tail - yule_pmf(t, k)) >= 5.0) {
      observed.push_back(hist.count(k) ? hist[k] : 0.0);
      expected.push_back(total * yule_pmf(t, k));
      tail -= yule_pmf(t, k);
      ++k;
    }
    double rest = 0.0;
    for (const auto& [c, m] : hist)
      if (c >= k) rest += m;
    observed.push_back(rest);
    expected.push_back(total * tail);
    write("yule.csv", [&](auto& o) {
      o << "k,observed,expected\n";
      for (std::size_t i = 0; i < observed.size(); ++i)
        o << i + 1 << ',' << format_number(observed[i]) << ','
          << format_number(expected[i]) << '\n';
    });
    const auto path = yule_counting(cfg_.path_length, cfg_.seeds.front());
    write("yule_path.csv", [&](auto& o) {
      o << "k,S_k\n";
      for (std::size_t i = 0; i < path.jump_times.size(); ++i)
        o << i + 1 << ',' << format_number(path.jump_times[i]) << '\n';
    });
    json agg;
    agg["t"] = t;
    agg["scaled_population"] = stats_json(w);
    agg["scaled_population_target"] = 1.0;
    if (observed.size() >= 2) {
      const auto chi = chi_square_gof(observed, expected);
      agg["chi_square"] = {{"statistic", chi.statistic}, {"dof", chi.dof}, {"p_value", chi.p_value}};
    }
    agg["ks_vs_exponential"] = ks_statistic(ws, [](double x) { return x > 0 ? -std::expm1(-x) : 0.0; });
    summary_["aggregate"] = agg;
  }

  void sizebias() {
    const double t = cfg_.t;
    const auto ray = replicas(0x2, [&](Stream& rng) { return size_biased_population(t, rng); });
    const auto two = replicas(0x3, [&](Stream& rng) { return size_biased_two_yule(t, rng); });
    RunningStats a, b;
    std::vector<double> wa, wb;
    for (auto c : ray) {
      a.add(static_cast<double>(c));
      wa.push_back(std::exp(-t) * static_cast<double>(c));
    }
    for (auto c : two) {
      b.add(static_cast<double>(c));
      wb.push_back(std::exp(-t) * static_cast<double>(c));
    }
    write("sizebias.csv", [&](auto& o) {
      o << "replica,ray,two_yule\n";
      for (std::size_t r = 0; r < ray.size(); ++r) o << r << ',' << ray[r] << ',' << two[r] << '\n';
    });
    const auto gamma2_cdf = [](double w) { return w > 0 ? 1.0 - (1.0 + w) * std::exp(-w) : 0.0; };
    summary_["aggregate"] = {{"t", t},
                             {"ray", stats_json(a)},
                             {"two_yule", stats_json(b)},
                             {"target_mean", 2.0 * std::exp(t) - 1.0},
                             {"ks_ray_vs_gamma2", ks_statistic(wa, gamma2_cdf)},
                             {"ks_two_yule_vs_gamma2", ks_statistic(wb, gamma2_cdf)},
                             {"ks_between_generators", ks_two_sample(wa, wb)}};
  }

  void limits() {
    const bool all = cfg_.check == "all";
    auto& agg = summary_["aggregate"];
    if (all || cfg_.check == "g") {
      double worst = 0.0;
      write("g_table.csv", [&](auto& o) {
        o << "z,G,G_quadrature,G_asymptote\n";
        for (double z : cfg_.z_grid) {
          const double g = flow_tail_limit(z);
          const double q = flow_tail_limit_quadrature(z);
          worst = std::max(worst, std::abs(g - q));
          o << format_number(z) << ',' << format_number(g) << ',' << format_number(q)
            << ',' << format_number(flow_tail_asymptote(z)) << '\n';
        }
      });
      agg["g_quadrature_max_gap"] = worst;
      gate("g_quadrature", worst, 1e-6);
    }
    if (all || cfg_.check == "mellin") {
      const auto m = mellin_check(cfg_.y);
      agg["mellin"] = {{"y", cfg_.y}, {"gamma_squared", m.gamma_squared},
                       {"transform", m.transform}, {"gap", m.gap}};
      gate("mellin", m.gap, 1e-4);
    }
    if (all || cfg_.check == "cox") {
      const double integral = cox_integral();
      agg["cox_integral"] = integral;
      const auto l = sample_cox_leftmost(cfg_.samples, cfg_.seeds.front());
      write("cox.csv", [&](auto& o) {
        o << "s,survival_quadrature,survival_sampled,standard_error\n";
        for (double s : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
          RunningStats above;
          for (double x : l) above.add(x > s ? 1.0 : 0.0);
          o << format_number(s) << ',' << format_number(cox_survival(s)) << ','
            << format_number(above.mean()) << ',' << format_number(above.standard_error())
            << '\n';
        }
      });
      gate("cox_integral", std::abs(integral - 1.0), 1e-4);
    }
    if (all || cfg_.check == "xi") {
      const auto xi = sample_xi(cfg_.xi_terms, cfg_.samples, cfg_.seeds.front());
      agg["xi"] = stats_json(summarize(xi));
      agg["xi_truncation_bias"] = xi_truncation_bias(cfg_.xi_terms);
    }
  }

  void distances() {
    const auto seed = cfg_.seeds.front();
    const double log_n = std::log(static_cast<double>(cfg_.n));
    std::vector<double> sim(cfg_.samples);
    parallel_for(sim.size(), cfg_.workers, [&](std::size_t r) {
      Stream rng(hash_key(seed, 0xd12, r));
      sim[r] = sample_pair_distance(cfg_.n, rng) - log_n;
    });
    const auto lim = distance_limit_samples(cfg_.k, cfg_.samples, seed);
    const auto gl = lim.first_pair_gumbel_logistic();
    const auto gt = lim.first_pair_gumbel_triples();
    write("distances.csv", [&](auto& o) {
      o << "replica,simulated,gumbel_logistic,gumbel_triple\n";
      for (std::size_t r = 0; r < sim.size(); ++r)
        o << r << ',' << format_number(sim[r]) << ',' << format_number(gl[r]) << ','
          << format_number(gt[r]) << '\n';
    });
    const auto s = summarize(sim);
    summary_["aggregate"] = {
        {"n", cfg_.n},
        {"simulated", stats_json(s)},
        {"simulated_expected_mean", expected_pair_distance(cfg_.n) - log_n},
        {"limit_mean", kEulerGamma},
        {"limit_variance", std::numbers::pi * std::numbers::pi / 2.0},
        {"gumbel_logistic", stats_json(summarize(gl))},
        {"gumbel_triple", stats_json(summarize(gt))},
        {"ks_between_representations", ks_two_sample(gl, gt)},
        {"ks_simulated_vs_limit", ks_statistic(sim, distance_limit_cdf)}};
    if (cfg_.tolerance)
      gate("ks_simulated_vs_limit",
           summary_["aggregate"]["ks_simulated_vs_limit"].get<double>(), *cfg_.tolerance);
  }

  void compare() {
    std::ifstream in(cfg_.input);
    if (!in) throw ConfigError("input", "cannot read " + cfg_.input);
    TailComparison r;
    if (cfg_.reference.empty()) {
      r = compare_tail_csv(in, [](double z) { return flow_tail_limit(z); });
    } else {
      std::ifstream ref(cfg_.reference);
      if (!ref) throw ConfigError("reference", "cannot read " + cfg_.reference);
      r = compare_tail_csv(in, ref);
    }
    write("compare.csv", [&](auto& o) {
      o << "z,G_hat,G_limit,abs_err\n";
      for (std::size_t i = 0; i < r.zs.size(); ++i)
        o << format_number(r.zs[i]) << ',' << format_number(r.observed[i]) << ','
          << format_number(r.limit[i]) << ','
          << format_number(std::abs(r.observed[i] - r.limit[i])) << '\n';
    });
    summary_["aggregate"]["sup_error"] = r.sup_error;
    if (cfg_.tolerance) gate("sup_error", r.sup_error, *cfg_.tolerance);
  }

  const ExperimentConfig& cfg_;
  json summary_;
  RunOutcome outcome_;
};

}  // namespace

RunOutcome run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  return Runner(cfg).run();
}

}  // namespace edgeflow
