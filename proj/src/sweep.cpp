#include "qchan/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qchan/errors.hpp"
#include "qchan/quantumness.hpp"
#include "qchan/rng.hpp"

namespace qchan {

namespace {

constexpr std::uint64_t kValidationSeed = 0x7153a9f3u;  // fixed probe stream

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "rtn") return Family::Rtn;
  if (name == "nmd") return Family::Nmd;
  if (name == "pd") return Family::Pd;
  if (name == "gad") return Family::Gad;
  if (name == "ad") return Family::Ad;
  if (name == "unruh") return Family::Unruh;
  throw ConfigError("family: unknown value '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Rtn: return "rtn";
    case Family::Nmd: return "nmd";
    case Family::Pd: return "pd";
    case Family::Gad: return "gad";
    case Family::Ad: return "ad";
    case Family::Unruh: return "unruh";
  }
  return "?";
}

std::string to_string(Regime regime) {
  return regime == Regime::Markovian ? "Markovian" : "NonMarkovian";
}

void validate_config(const SweepConfig& cfg) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };

  if (cfg.steps < 2) fail("steps: must be >= 2, got " + std::to_string(cfg.steps));
  if (!(cfg.start < cfg.stop))
    fail("start/stop: need start < stop, got [" + fmt12(cfg.start) + ", " +
         fmt12(cfg.stop) + "]");
  if (cfg.mc_samples < 0)
    fail("mc_samples: must be >= 0, got " + std::to_string(cfg.mc_samples));

  switch (cfg.family) {
    case Family::Rtn:
      if (cfg.b < 0) fail("b: must be >= 0, got " + fmt12(cfg.b));
      if (cfg.gamma <= 0) fail("gamma: must be > 0, got " + fmt12(cfg.gamma));
      if (cfg.start < 0) fail("start: rtn time must be >= 0");
      break;
    case Family::Nmd:
      if (cfg.alpha < 0 || cfg.alpha > 1)
        fail("alpha: must be in [0, 1], got " + fmt12(cfg.alpha));
      if (cfg.kappa <= 0) fail("kappa: must be > 0, got " + fmt12(cfg.kappa));
      if (cfg.start < 0) fail("start: nmd time must be >= 0");
      break;
    case Family::Pd:
      if (cfg.start < 0) fail("start: chi_t must be >= 0");
      if (cfg.stop > std::numbers::pi / 2)
        fail("stop: chi_t must be <= pi/2, got " + fmt12(cfg.stop));
      break;
    case Family::Gad:
      if (cfg.n < 0) fail("n: must be >= 0, got " + fmt12(cfg.n));
      [[fallthrough]];
    case Family::Ad:
      if (cfg.gamma <= 0) fail("gamma: must be > 0, got " + fmt12(cfg.gamma));
      if (cfg.start < 0) fail("start: time must be >= 0");
      break;
    case Family::Unruh:
      if (cfg.unruh_sweep == UnruhSweep::Angle) {
        if (cfg.start < 0) fail("start: r must be >= 0");
        if (cfg.stop >= std::numbers::pi / 4)
          fail("stop: r must be < pi/4, got " + fmt12(cfg.stop));
      } else {
        if (cfg.start <= 0) fail("start: acceleration must be > 0");
        if (cfg.omega <= 0)
          fail("omega: required (> 0) when sweeping acceleration, got " +
               fmt12(cfg.omega));
      }
      break;
  }
}

ZooParams params_at(const SweepConfig& cfg, double x) {
  switch (cfg.family) {
    case Family::Rtn: return RtnParams{cfg.b, cfg.gamma, x};
    case Family::Nmd: return NmdParams{cfg.alpha, p_of_t(cfg.kappa, x), cfg.kappa};
    case Family::Pd: return PdParams{x};
    case Family::Gad: return GadParams{cfg.n, cfg.gamma, x};
    case Family::Ad: return GadParams{0.0, cfg.gamma, x};
    case Family::Unruh:
      return cfg.unruh_sweep == UnruhSweep::Angle
                 ? UnruhParams{x}
                 : UnruhParams::from_acceleration(x, cfg.omega);
  }
  throw ConfigError("family: invalid enum value");
}

SweepRow evaluate_point(const ZooParams& params, double sweep_var,
                        long long mc_samples, std::uint64_t seed,
                        bool with_regime) {
  const KrausChannel channel = make_channel(params);

  SweepRow row;
  row.sweep_var = sweep_var;
  row.q_pipeline = quantumness(channel);
  row.q_reference = reference_quantumness(params);
  row.f_analytic = average_fidelity_analytic(channel);
  row.f_reference = reference_avg_fidelity(params);
  if (mc_samples > 0) {
    const FidelityEstimate est = average_fidelity_mc(channel, mc_samples, seed);
    row.f_mc = est.mean;
    row.f_mc_stderr = est.std_error;
  }
  if (with_regime) {
    if (const auto* rtn = std::get_if<RtnParams>(&params))
      row.regime = rtn_regime(rtn->b, rtn->gamma);
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);

  const double span = cfg.stop - cfg.start;
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.steps));
  for (int i = 0; i < cfg.steps; ++i) {
    const double x = (i == cfg.steps - 1)
                         ? cfg.stop
                         : cfg.start + span * i / (cfg.steps - 1);
    const std::uint64_t point_seed =
        rng::substream(cfg.seed, static_cast<std::uint64_t>(i));
    rows.push_back(evaluate_point(params_at(cfg, x), x, cfg.mc_samples,
                                  point_seed, cfg.family == Family::Rtn));
  }
  return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  if (rows.empty()) throw ConfigError("rows: nothing to write");

  const bool with_mc = rows.front().f_mc.has_value();
  const bool with_regime = rows.front().regime.has_value();

  out << "sweep_var,Q_pipeline,Q_reference,F_analytic,F_reference";
  if (with_mc) out << ",F_mc,F_mc_stderr";
  if (with_regime) out << ",regime";
  out << '\n';

  for (const SweepRow& r : rows) {
    out << fmt12(r.sweep_var) << ',' << fmt12(r.q_pipeline) << ','
        << fmt12(r.q_reference) << ',' << fmt12(r.f_analytic) << ','
        << fmt12(r.f_reference);
    if (with_mc) out << ',' << fmt12(*r.f_mc) << ',' << fmt12(*r.f_mc_stderr);
    if (with_regime) out << ',' << to_string(*r.regime);
    out << '\n';
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  emit_csv(rows, file);
  file.flush();
  if (!file) throw IoError("write failed for '" + path + "'");
}

std::string csv_string(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  emit_csv(rows, out);
  return out.str();
}

std::vector<SweepConfig> figure_presets(const std::string& name) {
  std::vector<SweepConfig> presets;

  auto base = [](Family family, std::string label, std::string description) {
    SweepConfig cfg;
    cfg.family = family;
    cfg.label = std::move(label);
    cfg.description = std::move(description);
    cfg.seed = 1;
    return cfg;
  };

  if (name == "fig1") {
    SweepConfig nm = base(Family::Rtn, "nonmarkovian",
                          "RTN quantumness and average fidelity vs t; "
                          "b=0.05, gamma=0.001 (oscillatory kernel); "
                          "t range [0, 5000] s chosen to show several "
                          "revivals.");
    nm.b = 0.05;
    nm.gamma = 0.001;
    nm.start = 0;
    nm.stop = 5000;
    nm.steps = 500;

    SweepConfig m = base(Family::Rtn, "markovian",
                         "RTN vs t; b=0.07 with gamma left open in the "
                         "source, gamma=1 chosen for the monotone "
                         "saturating curve; t range [0, 500] s reaches "
                         "saturation.");
    m.b = 0.07;
    m.gamma = 1;
    m.start = 0;
    m.stop = 500;
    m.steps = 500;
    presets = {nm, m};
  } else if (name == "fig2") {
    for (double alpha : {0.0, 0.5, 1.0}) {
      SweepConfig cfg = base(Family::Nmd, "alpha_" + fmt12(alpha),
                             "NMD vs t with kappa=1 (so kappa*t is the "
                             "axis); alpha set {0, 0.5, 1} chosen to span "
                             "the Markovian limit through maximal "
                             "non-Markovianity; t range [0, 10].");
      cfg.alpha = alpha;
      cfg.kappa = 1;
      cfg.start = 0;
      cfg.stop = 10;
      cfg.steps = 200;
      presets.push_back(cfg);
    }
  } else if (name == "fig3") {
    SweepConfig cfg = base(Family::Pd, "pd",
                           "PD vs chi*t over the full domain [0, pi/2].");
    cfg.start = 0;
    cfg.stop = std::numbers::pi / 2;
    cfg.steps = 100;
    presets = {cfg};
  } else if (name == "fig4") {
    SweepConfig hot = base(Family::Gad, "n50",
                           "GAD vs t; n=50, gamma=1; t range [0, 0.3] s "
                           "covers the fast decay and the branch "
                           "crossover near t=0.12.");
    hot.n = 50;
    hot.gamma = 1;
    hot.start = 0;
    hot.stop = 0.3;
    hot.steps = 300;

    SweepConfig cold = base(Family::Gad, "n0",
                            "GAD vs t; n=0 (amplitude damping), gamma=1; "
                            "t range [0, 5] s covers the crossover near "
                            "t=0.36 and the slow tail.");
    cold.n = 0;
    cold.gamma = 1;
    cold.start = 0;
    cold.stop = 5;
    cold.steps = 500;
    presets = {hot, cold};
  } else if (name == "fig5") {
    SweepConfig cfg = base(Family::Unruh, "unruh",
                           "Unruh channel vs acceleration a in natural "
                           "units; mode frequency omega=1 chosen (none "
                           "given in the source); a range [0.1, 50] shows "
                           "the saturation plateau.");
    cfg.unruh_sweep = UnruhSweep::Acceleration;
    cfg.omega = 1;
    cfg.start = 0.1;
    cfg.stop = 50;
    cfg.steps = 500;
    presets = {cfg};
  } else {
    throw UnknownFigure("no figure preset named '" + name + "'");
  }
  return presets;
}

// ---------------------------------------------------------------------------
// Validation reports
// ---------------------------------------------------------------------------

bool ValidationReport::passed() const {
  return completeness_residual <= tol::kCompleteness &&
         min_choi_eigenvalue >= -tol::kChoiPsd &&
         affine_residual <= 1e-10;
}

ValidationReport validate_channel(const KrausChannel& channel) {
  ValidationReport report;
  report.completeness_residual = completeness_residual(channel);
  report.min_choi_eigenvalue = choi_matrix(channel).eigenvalues()[3];

  // Affine extraction without the completeness gate, so broken channels
  // still produce a full report.
  const Mat2 paulis[3] = {kPauliX, kPauliY, kPauliZ};
  Mat3 a;
  for (int j = 0; j < 3; ++j) {
    const Mat2 image = apply_to_matrix(channel, paulis[j]);
    for (int i = 0; i < 3; ++i)
      a(i, j) = 0.5 * std::real(trace(paulis[i] * image));
  }
  const Mat2 unit_image = apply_to_matrix(channel, kIdentity2);
  const Vec3 b = {0.5 * std::real(trace(kPauliX * unit_image)),
                  0.5 * std::real(trace(kPauliY * unit_image)),
                  0.5 * std::real(trace(kPauliZ * unit_image))};
  report.unital = norm(b) <= tol::kUnital;

  double residual = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const QubitState rho = random_state(kValidationSeed, i);
    const BlochVector xi = density_to_bloch(rho);
    const Mat2 out = apply_to_matrix(channel, rho.matrix());
    const Vec3 image = {std::real(trace(kPauliX * out)),
                        std::real(trace(kPauliY * out)),
                        std::real(trace(kPauliZ * out))};
    const Vec3 predicted = a * xi + b;
    const Vec3 diff = image - predicted;
    residual = std::max(residual, std::max(std::abs(diff.x),
                                           std::max(std::abs(diff.y),
                                                    std::abs(diff.z))));
  }
  report.affine_residual = residual;
  return report;
}

ValidationReport validate_family(const ZooParams& params) {
  ValidationReport report = validate_channel(make_channel(params));
  if (const auto* rtn = std::get_if<RtnParams>(&params))
    report.regime = rtn_regime(rtn->b, rtn->gamma);
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream out;
  out << "completeness_residual=" << fmt12(report.completeness_residual)
      << '\n'
      << "min_choi_eigenvalue=" << fmt12(report.min_choi_eigenvalue) << '\n'
      << "unital=" << (report.unital ? "true" : "false") << '\n'
      << "affine_residual=" << fmt12(report.affine_residual) << '\n';
  if (report.regime) out << "regime=" << to_string(*report.regime) << '\n';
  out << "result=" << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

KrausChannel load_kraus_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");

  nlohmann::json doc;
  try {
    file >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("kraus file '" + path + "': " + e.what());
  }

  auto parse_entry = [&](const nlohmann::json& j) -> cplx {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
      return cplx(j[0].get<double>(), j[1].get<double>());
    throw ConfigError("kraus file '" + path +
                      "': entries must be numbers or [re, im] pairs");
  };

  if (!doc.is_array() || doc.empty())
    throw ConfigError("kraus file '" + path +
                      "': expected a nonempty array of 2x2 matrices");

  std::vector<Mat2> ops;
  for (const auto& matrix : doc) {
    if (!matrix.is_array() || matrix.size() != 2)
      throw ConfigError("kraus file '" + path +
                        "': each operator must have two rows");
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
      if (!matrix[r].is_array() || matrix[r].size() != 2)
        throw ConfigError("kraus file '" + path +
                          "': each row must have two entries");
      for (int c = 0; c < 2; ++c) m(r, c) = parse_entry(matrix[r][c]);
    }
    ops.push_back(m);
  }
  return KrausChannel(std::move(ops));
}

}  // namespace qchan
