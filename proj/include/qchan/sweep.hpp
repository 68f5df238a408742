#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qchan/zoo.hpp"

namespace qchan {

enum class Family { Rtn, Nmd, Pd, Gad, Ad, Unruh };

Family family_from_string(const std::string& name);  // ConfigError on unknown
std::string to_string(Family family);
std::string to_string(Regime regime);

/// What the grid variable means for the Unruh family.
enum class UnruhSweep { Angle, Acceleration };

/// One sweep: a channel family, its fixed parameters, and an inclusive
/// uniform grid over the family's sweep variable (t for rtn/nmd/gad/ad,
/// chi*t for pd, r or a for unruh).
struct SweepConfig {
  Family family = Family::Rtn;

  double b = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;
  double kappa = 0.0;
  double n = 0.0;
  double omega = 0.0;
  UnruhSweep unruh_sweep = UnruhSweep::Angle;

  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  long long mc_samples = 0;  // 0 disables the Monte Carlo columns
  std::uint64_t seed = 0;

  std::string label;        // used for per-file naming in figure presets
  std::string description;  // documents defaults chosen for the preset
};

struct SweepRow {
  double sweep_var = 0.0;
  double q_pipeline = 0.0;
  double q_reference = 0.0;
  double f_analytic = 0.0;
  double f_reference = 0.0;
  std::optional<double> f_mc;
  std::optional<double> f_mc_stderr;
  std::optional<Regime> regime;
};

/// Throws ConfigError naming the offending field.
void validate_config(const SweepConfig& cfg);

/// Zoo parameters for sweep-variable value x under this config.
ZooParams params_at(const SweepConfig& cfg, double x);

/// Evaluates one parameter point.  `seed` is the already-derived per-point
/// stream; MC columns are filled when mc_samples > 0.
SweepRow evaluate_point(const ZooParams& params, double sweep_var,
                        long long mc_samples, std::uint64_t seed,
                        bool with_regime);

/// One row per grid point, ordered by sweep variable; deterministic for a
/// given (config, seed).
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// CSV with exactly the columns
/// sweep_var,Q_pipeline,Q_reference,F_analytic,F_reference
/// [,F_mc,F_mc_stderr][,regime], 12 significant digits, LF line endings.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::string csv_string(const std::vector<SweepRow>& rows);

/// Sweep configurations reproducing the published figures fig1..fig5.
/// Values the captions leave open are chosen here and noted in each
/// config's description.
std::vector<SweepConfig> figure_presets(const std::string& name);

// ---------------------------------------------------------------------------
// Channel validation reports
// ---------------------------------------------------------------------------

struct ValidationReport {
  double completeness_residual = 0.0;
  double min_choi_eigenvalue = 0.0;
  bool unital = false;
  double affine_residual = 0.0;  // max over random states
  std::optional<Regime> regime;

  bool passed() const;
};

ValidationReport validate_channel(const KrausChannel& channel);
ValidationReport validate_family(const ZooParams& params);
std::string format_report(const ValidationReport& report);

/// Reads a JSON array of 2x2 matrices; entries are numbers or [re, im]
/// pairs.  Throws ConfigError on malformed input, IoError on unreadable
/// files.
KrausChannel load_kraus_json(const std::string& path);

}  // namespace qchan
