#pragma once

#include <variant>

#include "qchan/channel.hpp"

namespace qchan {

enum class Regime { Markovian, NonMarkovian };

// ---------------------------------------------------------------------------
// Random telegraph noise (dephasing, memory kernel Lambda(t))
// ---------------------------------------------------------------------------

struct RtnParams {
  double b = 0.0;      // coupling strength, 1/s; >= 0
  double gamma = 0.0;  // fluctuation-rate parameter, 1/s; > 0
  double t = 0.0;      // time, s; >= 0
};

/// Memory kernel Lambda(t) in [-1, 1].  Branches on w^2 = (2b/gamma)^2 - 1:
/// oscillatory (w^2 > 0), hyperbolic (w^2 < 0), and the critical limit
/// e^{-gamma t}(1 + gamma t) when |w^2| <= 1e-9.
double rtn_kernel(const RtnParams& p);

/// Oscillatory kernel <=> non-Markovian; the boundary (2b/gamma)^2 = 1 is
/// assigned to the Markovian side.
Regime rtn_regime(double b, double gamma);

/// Kraus pair {sqrt((1+L)/2) I, sqrt((1-L)/2) sz}.
KrausChannel rtn_channel(const RtnParams& p);

// ---------------------------------------------------------------------------
// Non-Markovian dephasing
// ---------------------------------------------------------------------------

struct NmdParams {
  double alpha = 0.0;  // degree of non-Markovianity, in [0, 1]
  double p = 0.0;      // time-like parameter, in [0, 1/2]
  double kappa = 0.0;  // rate for the p(t) parametrization, 1/s (optional)
};

/// Off-diagonal damping factor Omega = 1 - 2p - 2 alpha p (1-p).
double nmd_omega(double alpha, double p);

/// p(t) = (1 - e^{-kappa t}) / 2; runs 0 -> 1/2 as t -> infinity.
double p_of_t(double kappa, double t);

/// Kraus pair {sqrt((1-alpha p)(1-p)) I, sqrt(p + alpha p (1-p)) sz}.
KrausChannel nmd_channel(const NmdParams& p);

// ---------------------------------------------------------------------------
// Phase damping
// ---------------------------------------------------------------------------

struct PdParams {
  double chi_t = 0.0;  // dimensionless phase chi*t, in [0, pi/2]
};

/// Kraus {diag(1, sqrt(1-S)), diag(0, sqrt(S))} with S = 1 - cos^2(chi t).
KrausChannel pd_channel(const PdParams& p);

// ---------------------------------------------------------------------------
// Generalized amplitude damping (n = 0 reduces to amplitude damping)
// ---------------------------------------------------------------------------

struct GadParams {
  double n = 0.0;      // mean bath excitation number, >= 0
  double gamma = 0.0;  // spontaneous emission rate, 1/s; > 0
  double t = 0.0;      // time, s; >= 0

  double theta() const { return (n + 1.0) / (2.0 * n + 1.0); }
  double s() const;    // exp(-gamma t (2n+1) / 2)
};

/// Four Kraus operators with internal decay probability p = 1 - s (forced by
/// the completeness relation).
KrausChannel gad_channel(const GadParams& p);

// ---------------------------------------------------------------------------
// Unruh channel
// ---------------------------------------------------------------------------

struct UnruhParams {
  double r = 0.0;  // Unruh angle, in [0, pi/4)

  /// cos(r) = [1 + exp(-2 pi omega / a)]^{-1/2}, natural units.  Both the
  /// acceleration and the mode frequency must be supplied and positive.
  static UnruhParams from_acceleration(double a, double omega);
};

/// Kraus pair {[[cos r, 0], [0, 1]], [[0, 0], [sin r, 0]]}.
KrausChannel unruh_channel(const UnruhParams& p);

// ---------------------------------------------------------------------------
// Family dispatch and closed-form reference values
// ---------------------------------------------------------------------------

using ZooParams =
    std::variant<RtnParams, NmdParams, PdParams, GadParams, UnruhParams>;

KrausChannel make_channel(const ZooParams& params);

/// Closed-form quantumness for the family, transcribed as published and used
/// for cross-validation only.  Known divergences from the eigenvalue route
/// (GAD with n > 0, Unruh with cos^2 r > 5/6) are reported as-is, never
/// patched to match.
double reference_quantumness(const ZooParams& params);

/// Closed-form average fidelity for the family.
double reference_avg_fidelity(const ZooParams& params);

}  // namespace qchan
