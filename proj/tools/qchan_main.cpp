// Command-line front end: validate channels, evaluate single points, sweep
// parameter grids, and emit the CSV data behind the figure presets.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qchan/errors.hpp"
#include "qchan/sweep.hpp"

namespace {

using qchan::ConfigError;

struct Options {
  std::optional<std::string> family;
  std::optional<double> b, gamma, alpha, kappa, n, r, a, omega, chi_t, t;
  std::optional<double> t_start, t_stop;
  std::optional<int> steps;
  std::optional<long long> mc_samples;
  std::optional<unsigned long long> seed;
  std::optional<std::string> out;
  std::string config_path;
  std::string kraus_file;
};

void add_family_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--family", opt.family, "channel family: rtn|nmd|pd|gad|ad|unruh");
  cmd->add_option("--b", opt.b, "RTN coupling strength (1/s)");
  cmd->add_option("--gamma", opt.gamma, "RTN fluctuation rate / GAD emission rate (1/s)");
  cmd->add_option("--alpha", opt.alpha, "NMD non-Markovianity degree in [0,1]");
  cmd->add_option("--kappa", opt.kappa, "NMD rate for p(t) (1/s)");
  cmd->add_option("--n", opt.n, "GAD mean bath excitation number");
  cmd->add_option("--r", opt.r, "Unruh angle in [0, pi/4)");
  cmd->add_option("--a", opt.a, "Unruh acceleration (natural units)");
  cmd->add_option("--omega", opt.omega, "Unruh mode frequency (natural units)");
  cmd->add_option("--chi-t", opt.chi_t, "PD phase chi*t in [0, pi/2]");
  cmd->add_option("--config", opt.config_path, "key=value config file; flags override");
}

void add_mc_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--mc-samples", opt.mc_samples,
                  "Monte Carlo samples per point (0 disables the MC columns)");
  cmd->add_option("--seed", opt.seed, "master seed for the MC sampler");
}

// --------------------------------------------------------------------------
// key=value config files; command-line flags take precedence
// --------------------------------------------------------------------------

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse '" + value + "' as a number");
  }
}

void merge_config_file(Options& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream file(opt.config_path);
  if (!file) throw ConfigError("config: cannot open '" + opt.config_path + "'");

  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " is not key=value");
    kv[trim(stripped.substr(0, eq))] = trim(stripped.substr(eq + 1));
  }

  auto take_double = [&](const char* key, std::optional<double>& slot) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    if (!slot) slot = parse_double(key, it->second);
    kv.erase(it);
  };

  if (auto it = kv.find("family"); it != kv.end()) {
    if (!opt.family) opt.family = it->second;
    kv.erase(it);
  }
  take_double("b", opt.b);
  take_double("gamma", opt.gamma);
  take_double("alpha", opt.alpha);
  take_double("kappa", opt.kappa);
  take_double("n", opt.n);
  take_double("r", opt.r);
  take_double("a", opt.a);
  take_double("omega", opt.omega);
  take_double("chi_t", opt.chi_t);
  take_double("t", opt.t);
  take_double("t_start", opt.t_start);
  take_double("t_stop", opt.t_stop);
  if (auto it = kv.find("steps"); it != kv.end()) {
    if (!opt.steps)
      opt.steps = static_cast<int>(parse_double("steps", it->second));
    kv.erase(it);
  }
  if (auto it = kv.find("mc_samples"); it != kv.end()) {
    if (!opt.mc_samples)
      opt.mc_samples =
          static_cast<long long>(parse_double("mc_samples", it->second));
    kv.erase(it);
  }
  if (auto it = kv.find("seed"); it != kv.end()) {
    if (!opt.seed)
      opt.seed = static_cast<unsigned long long>(
          parse_double("seed", it->second));
    kv.erase(it);
  }
  if (auto it = kv.find("out"); it != kv.end()) {
    if (!opt.out) opt.out = it->second;
    kv.erase(it);
  }
  if (!kv.empty())
    throw ConfigError("config: unknown key '" + kv.begin()->first + "'");
}

// --------------------------------------------------------------------------
// builders
// --------------------------------------------------------------------------

qchan::Family required_family(const Options& opt) {
  if (!opt.family) throw ConfigError("family: required");
  return qchan::family_from_string(*opt.family);
}

qchan::SweepConfig build_sweep_config(const Options& opt) {
  qchan::SweepConfig cfg;
  cfg.family = required_family(opt);
  cfg.b = opt.b.value_or(0.0);
  cfg.gamma = opt.gamma.value_or(0.0);
  cfg.alpha = opt.alpha.value_or(0.0);
  cfg.kappa = opt.kappa.value_or(0.0);
  cfg.n = opt.n.value_or(0.0);
  cfg.omega = opt.omega.value_or(0.0);
  if (cfg.family == qchan::Family::Unruh)
    cfg.unruh_sweep = opt.omega ? qchan::UnruhSweep::Acceleration
                                : qchan::UnruhSweep::Angle;

  if (!opt.t_start) throw ConfigError("t-start: required for sweeps");
  if (!opt.t_stop) throw ConfigError("t-stop: required for sweeps");
  if (!opt.steps) throw ConfigError("steps: required for sweeps");
  cfg.start = *opt.t_start;
  cfg.stop = *opt.t_stop;
  cfg.steps = *opt.steps;
  cfg.mc_samples = opt.mc_samples.value_or(0);
  cfg.seed = opt.seed.value_or(0);
  return cfg;
}

std::pair<qchan::ZooParams, double> build_point(const Options& opt) {
  const qchan::Family family = required_family(opt);
  auto need = [](const std::optional<double>& slot,
                 const char* name) -> double {
    if (!slot) throw ConfigError(std::string(name) + ": required");
    return *slot;
  };

  switch (family) {
    case qchan::Family::Rtn: {
      const double t = need(opt.t, "t");
      return {qchan::RtnParams{opt.b.value_or(0.0), opt.gamma.value_or(0.0), t},
              t};
    }
    case qchan::Family::Nmd: {
      const double t = need(opt.t, "t");
      const double kappa = need(opt.kappa, "kappa");
      return {qchan::NmdParams{opt.alpha.value_or(0.0),
                               qchan::p_of_t(kappa, t), kappa},
              t};
    }
    case qchan::Family::Pd: {
      const double x = need(opt.chi_t, "chi-t");
      return {qchan::PdParams{x}, x};
    }
    case qchan::Family::Gad: {
      const double t = need(opt.t, "t");
      return {qchan::GadParams{opt.n.value_or(0.0), opt.gamma.value_or(0.0), t},
              t};
    }
    case qchan::Family::Ad: {
      const double t = need(opt.t, "t");
      return {qchan::GadParams{0.0, opt.gamma.value_or(0.0), t}, t};
    }
    case qchan::Family::Unruh: {
      if (opt.a) {
        const double omega = need(opt.omega, "omega");
        return {qchan::UnruhParams::from_acceleration(*opt.a, omega), *opt.a};
      }
      const double r = need(opt.r, "r");
      return {qchan::UnruhParams{r}, r};
    }
  }
  throw ConfigError("family: invalid enum value");
}

void write_rows(const std::vector<qchan::SweepRow>& rows,
                const std::optional<std::string>& out) {
  if (out)
    qchan::emit_csv(rows, *out);
  else
    qchan::emit_csv(rows, std::cout);
}

// --------------------------------------------------------------------------
// subcommand drivers
// --------------------------------------------------------------------------

int run_point(Options& opt) {
  merge_config_file(opt);
  const auto [params, sweep_var] = build_point(opt);
  const qchan::SweepRow row = qchan::evaluate_point(
      params, sweep_var, opt.mc_samples.value_or(0), opt.seed.value_or(0),
      std::holds_alternative<qchan::RtnParams>(params));
  write_rows({row}, opt.out);
  return 0;
}

int run_sweep_cmd(Options& opt) {
  merge_config_file(opt);
  const qchan::SweepConfig cfg = build_sweep_config(opt);
  write_rows(qchan::run_sweep(cfg), opt.out);
  return 0;
}

int run_validate(Options& opt) {
  merge_config_file(opt);
  qchan::ValidationReport report;
  if (!opt.kraus_file.empty()) {
    report = qchan::validate_channel(qchan::load_kraus_json(opt.kraus_file));
  } else {
    const auto [params, sweep_var] = build_point(opt);
    (void)sweep_var;
    report = qchan::validate_family(params);
  }
  std::cout << qchan::format_report(report);
  return report.passed() ? 0 : 1;
}

int run_figure(const std::string& name, const std::string& out_dir,
               Options& opt) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (qchan::SweepConfig cfg : qchan::figure_presets(name)) {
    if (opt.mc_samples) cfg.mc_samples = *opt.mc_samples;
    if (opt.seed) cfg.seed = *opt.seed;
    const fs::path path = fs::path(out_dir) / (name + "_" + cfg.label + ".csv");
    qchan::emit_csv(qchan::run_sweep(cfg), path.string());
    std::cout << path.string() << "  # " << cfg.description << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qubit channel quantumness and average-fidelity toolkit"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* point = app.add_subcommand(
      "point", "evaluate Q and average fidelity at one parameter point");
  add_family_flags(point, opt);
  point->add_option("--t", opt.t, "time (sweep variable for rtn/nmd/gad/ad)");
  add_mc_flags(point, opt);
  point->add_option("--out", opt.out, "output CSV path (default: stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "evaluate a uniform grid over the family's sweep variable");
  add_family_flags(sweep, opt);
  sweep->add_option("--t-start", opt.t_start, "grid start (inclusive)");
  sweep->add_option("--t-stop", opt.t_stop, "grid stop (inclusive)");
  sweep->add_option("--steps", opt.steps, "number of grid points (>= 2)");
  add_mc_flags(sweep, opt);
  sweep->add_option("--out", opt.out, "output CSV path (default: stdout)");

  CLI::App* validate = app.add_subcommand(
      "validate", "check completeness, Choi positivity, unitality, and the "
                  "affine representation");
  add_family_flags(validate, opt);
  validate->add_option("--t", opt.t, "time for rtn/nmd/gad/ad");
  validate->add_option("--kraus-file", opt.kraus_file,
                       "JSON file with a list of 2x2 Kraus matrices");

  CLI::App* figure = app.add_subcommand(
      "figure", "write the CSV data for a figure preset (fig1..fig5)");
  std::string figure_name;
  std::string out_dir = ".";
  figure->add_option("name", figure_name, "preset name: fig1..fig5")
      ->required();
  figure->add_option("--out-dir", out_dir, "output directory (default: .)");
  add_mc_flags(figure, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (point->parsed()) return run_point(opt);
    if (sweep->parsed()) return run_sweep_cmd(opt);
    if (validate->parsed()) return run_validate(opt);
    if (figure->parsed()) return run_figure(figure_name, out_dir, opt);
  } catch (const qchan::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
