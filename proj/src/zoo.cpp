#include "qchan/zoo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.hpp"

namespace qchan {

namespace {

constexpr double kCriticalBand = 1e-9;  // |w^2| below this -> critical branch

void check_rtn(const RtnParams& p) {
  if (p.b < 0) throw OutOfRange("rtn: b = " + std::to_string(p.b) + " < 0");
  if (p.gamma <= 0)
    throw OutOfRange("rtn: gamma = " + std::to_string(p.gamma) + " <= 0");
  if (p.t < 0) throw OutOfRange("rtn: t = " + std::to_string(p.t) + " < 0");
}

void check_nmd(const NmdParams& p) {
  if (p.alpha < 0 || p.alpha > 1)
    throw OutOfRange("nmd: alpha = " + std::to_string(p.alpha) +
                     " outside [0, 1]");
  if (p.p < 0 || p.p > 0.5)
    throw OutOfRange("nmd: p = " + std::to_string(p.p) + " outside [0, 1/2]");
}

void check_gad(const GadParams& p) {
  if (p.n < 0) throw OutOfRange("gad: n = " + std::to_string(p.n) + " < 0");
  if (p.gamma <= 0)
    throw OutOfRange("gad: gamma = " + std::to_string(p.gamma) + " <= 0");
  if (p.t < 0) throw OutOfRange("gad: t = " + std::to_string(p.t) + " < 0");
}

void check_pd(const PdParams& p) {
  if (!(p.chi_t >= 0 && p.chi_t <= std::numbers::pi / 2))
    throw OutOfRange("pd: chi_t = " + std::to_string(p.chi_t) +
                     " outside [0, pi/2]");
}

void check_unruh(const UnruhParams& p) {
  if (!(p.r >= 0 && p.r < std::numbers::pi / 4))
    throw OutOfRange("unruh: r = " + std::to_string(p.r) +
                     " outside [0, pi/4)");
}

KrausChannel dephasing_pair(double weight_identity, double weight_z) {
  const Mat2 m0 = std::sqrt(std::max(0.0, weight_identity)) * kIdentity2;
  const Mat2 m1 = std::sqrt(std::max(0.0, weight_z)) * kPauliZ;
  return KrausChannel({m0, m1});
}

}  // namespace

// ---------------------------------------------------------------------------
// RTN
// ---------------------------------------------------------------------------

double rtn_kernel(const RtnParams& p) {
  check_rtn(p);
  const double ratio = 2.0 * p.b / p.gamma;
  const double w2 = ratio * ratio - 1.0;
  const double gt = p.gamma * p.t;

  if (std::abs(w2) <= kCriticalBand) {
    return std::exp(-gt) * (1.0 + gt);
  }
  if (w2 > 0.0) {
    const double w = std::sqrt(w2);
    return std::exp(-gt) * (std::cos(w * gt) + std::sin(w * gt) / w);
  }
  // Hyperbolic branch, written via e^{-gt(1 -+ w)} so large t cannot
  // overflow cosh/sinh.
  const double w = std::sqrt(-w2);
  const double em = std::exp(-gt * (1.0 - w));
  const double ep = std::exp(-gt * (1.0 + w));
  return 0.5 * (em + ep) + 0.5 * (em - ep) / w;
}

Regime rtn_regime(double b, double gamma) {
  if (gamma <= 0)
    throw OutOfRange("rtn: gamma = " + std::to_string(gamma) + " <= 0");
  const double ratio = 2.0 * b / gamma;
  return ratio * ratio > 1.0 ? Regime::NonMarkovian : Regime::Markovian;
}

KrausChannel rtn_channel(const RtnParams& p) {
  const double lambda = rtn_kernel(p);
  if (std::abs(lambda) > 1.0 + 1e-12)
    throw KernelOutOfRange("rtn kernel " + std::to_string(lambda) +
                           " escaped [-1, 1]");
  return dephasing_pair(0.5 * (1.0 + lambda), 0.5 * (1.0 - lambda));
}

// ---------------------------------------------------------------------------
// NMD
// ---------------------------------------------------------------------------

double nmd_omega(double alpha, double p) {
  return 1.0 - 2.0 * p - 2.0 * alpha * p * (1.0 - p);
}

double p_of_t(double kappa, double t) {
  return 0.5 * (1.0 - std::exp(-kappa * t));
}

KrausChannel nmd_channel(const NmdParams& p) {
  check_nmd(p);
  return dephasing_pair((1.0 - p.alpha * p.p) * (1.0 - p.p),
                        p.p + p.alpha * p.p * (1.0 - p.p));
}

// ---------------------------------------------------------------------------
// PD
// ---------------------------------------------------------------------------

KrausChannel pd_channel(const PdParams& p) {
  check_pd(p);
  const double c = std::cos(p.chi_t);
  const double big_s = 1.0 - c * c;
  Mat2 m0;
  m0(0, 0) = 1.0;
  m0(1, 1) = std::sqrt(1.0 - big_s);
  Mat2 m1;
  m1(1, 1) = std::sqrt(big_s);
  return KrausChannel({m0, m1});
}

// ---------------------------------------------------------------------------
// GAD
// ---------------------------------------------------------------------------

double GadParams::s() const {
  return std::exp(-gamma * t * (2.0 * n + 1.0) / 2.0);
}

KrausChannel gad_channel(const GadParams& params) {
  check_gad(params);
  const double theta = params.theta();
  const double s = params.s();
  const double p = 1.0 - s;  // completeness forces s + p = 1

  Mat2 a0;
  a0(0, 0) = std::sqrt(theta);
  a0(1, 1) = std::sqrt(s * theta);
  Mat2 a1;
  a1(0, 1) = std::sqrt(p * theta);
  Mat2 a2;
  a2(0, 0) = std::sqrt(s * (1.0 - theta));
  a2(1, 1) = std::sqrt(1.0 - theta);
  Mat2 a3;
  a3(1, 0) = std::sqrt(p * (1.0 - theta));
  return KrausChannel({a0, a1, a2, a3});
}

// ---------------------------------------------------------------------------
// Unruh
// ---------------------------------------------------------------------------

UnruhParams UnruhParams::from_acceleration(double a, double omega) {
  if (a <= 0)
    throw OutOfRange("unruh: acceleration a = " + std::to_string(a) +
                     " <= 0");
  if (omega <= 0)
    throw OutOfRange("unruh: omega = " + std::to_string(omega) + " <= 0");
  const double cos_r =
      1.0 / std::sqrt(1.0 + std::exp(-2.0 * std::numbers::pi * omega / a));
  return UnruhParams{std::acos(std::min(1.0, cos_r))};
}

KrausChannel unruh_channel(const UnruhParams& p) {
  check_unruh(p);
  Mat2 u0;
  u0(0, 0) = std::cos(p.r);
  u0(1, 1) = 1.0;
  Mat2 u1;
  u1(1, 0) = std::sin(p.r);
  return KrausChannel({u0, u1});
}

// ---------------------------------------------------------------------------
// Dispatch and reference forms
// ---------------------------------------------------------------------------

KrausChannel make_channel(const ZooParams& params) {
  return std::visit(
      [](const auto& p) -> KrausChannel {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) return rtn_channel(p);
        if constexpr (std::is_same_v<T, NmdParams>) return nmd_channel(p);
        if constexpr (std::is_same_v<T, PdParams>) return pd_channel(p);
        if constexpr (std::is_same_v<T, GadParams>) return gad_channel(p);
        if constexpr (std::is_same_v<T, UnruhParams>) return unruh_channel(p);
      },
      params);
}

namespace {

// Published piecewise form for amplitude damping (n = 0), with xi = 1 - s.
// This one is consistent with the eigenvalue route everywhere.
double reference_q_ad(double s) {
  const double xi = 1.0 - s;
  if (xi <= 1.0 / 6.0) return 0.5 * (6.0 * xi * xi - 3.0 * xi + 2.0);
  return 1.0 - xi;
}

// Published piecewise form for n > 0, transcribed as printed: the first
// branch omits the s^2/2 eigenvalue contribution and the crossover time uses
// ln[5/(6 + 4n + n^2)].  Kept verbatim for cross-validation reporting.
double reference_q_gad(const GadParams& p) {
  if (p.n == 0.0) return reference_q_ad(p.s());
  const double s = p.s();
  const double two_theta_m1 = 2.0 * p.theta() - 1.0;
  const double tau = -2.0 / (p.gamma * (2.0 * p.n + 1.0)) *
                     std::log(5.0 / (6.0 + 4.0 * p.n + p.n * p.n));
  if (p.t <= tau)
    return 0.5 * s + 2.5 * two_theta_m1 * two_theta_m1 * (1.0 - s) * (1.0 - s);
  return s;
}

}  // namespace

double reference_quantumness(const ZooParams& params) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) {
          const double lambda = rtn_kernel(p);
          return lambda * lambda;
        }
        if constexpr (std::is_same_v<T, NmdParams>) {
          check_nmd(p);
          const double omega = nmd_omega(p.alpha, p.p);
          return omega * omega;
        }
        if constexpr (std::is_same_v<T, PdParams>) {
          check_pd(p);
          const double c = std::cos(p.chi_t);
          return c * c;
        }
        if constexpr (std::is_same_v<T, GadParams>) {
          check_gad(p);
          return reference_q_gad(p);
        }
        if constexpr (std::is_same_v<T, UnruhParams>) {
          check_unruh(p);
          const double c = std::cos(p.r);
          return c * c;
        }
      },
      params);
}

double reference_avg_fidelity(const ZooParams& params) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>)
          return (2.0 + rtn_kernel(p)) / 3.0;
        if constexpr (std::is_same_v<T, NmdParams>) {
          check_nmd(p);
          return (2.0 + nmd_omega(p.alpha, p.p)) / 3.0;
        }
        if constexpr (std::is_same_v<T, PdParams>) {
          check_pd(p);
          return (2.0 + std::cos(p.chi_t)) / 3.0;
        }
        if constexpr (std::is_same_v<T, GadParams>) {
          check_gad(p);
          const double s = p.s();
          return (3.0 + 2.0 * std::sqrt(s) + s) / 6.0;
        }
        if constexpr (std::is_same_v<T, UnruhParams>) {
          check_unruh(p);
          return (4.0 * std::cos(p.r) + std::cos(2.0 * p.r) + 7.0) / 12.0;
        }
      },
      params);
}

}  // namespace qchan
