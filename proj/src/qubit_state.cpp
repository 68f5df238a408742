#include "qchan/qubit_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.hpp"
#include "qchan/rng.hpp"

namespace qchan {

QubitState::QubitState(const Mat2& elements) : m_(elements) {
  const double herm = hermiticity_error(m_);
  if (herm > tol::kHermitian)
    throw InvalidState("density matrix not Hermitian (deviation " +
                       std::to_string(herm) + ")");
  const double tr = std::real(trace(m_));
  if (std::abs(tr - 1.0) > tol::kTrace)
    throw InvalidState("density matrix trace " + std::to_string(tr) +
                       " != 1");
  const auto ev = hermitian_eigenvalues(m_);
  if (ev[1] < -tol::kPsd)
    throw InvalidState("density matrix not positive semidefinite (eigenvalue " +
                       std::to_string(ev[1]) + ")");
}

double QubitState::purity() const { return std::real(trace(m_ * m_)); }

QubitState bloch_to_density(const BlochVector& v) {
  double n2 = norm_squared(v);
  if (n2 > 1.0 + tol::kBlochBall)
    throw InvalidBloch("Bloch vector norm^2 = " + std::to_string(n2) +
                       " exceeds 1");
  BlochVector u = v;
  if (n2 > 1.0) u = (1.0 / std::sqrt(n2)) * u;  // within tolerance: project

  Mat2 m;
  m(0, 0) = cplx(0.5 * (1.0 + u.z), 0.0);
  m(1, 1) = cplx(0.5 * (1.0 - u.z), 0.0);
  m(0, 1) = cplx(0.5 * u.x, -0.5 * u.y);
  m(1, 0) = cplx(0.5 * u.x, 0.5 * u.y);
  return QubitState(m);
}

BlochVector density_to_bloch(const QubitState& rho) {
  const Mat2& m = rho.matrix();
  return {std::real(trace(kPauliX * m)), std::real(trace(kPauliY * m)),
          std::real(trace(kPauliZ * m))};
}

QubitState pure_state(const PureAngles& angles) {
  if (!(angles.theta >= 0.0 && angles.theta <= std::numbers::pi))
    throw OutOfRange("theta = " + std::to_string(angles.theta) +
                     " outside [0, pi]");
  if (!(angles.phi >= 0.0 && angles.phi < 2.0 * std::numbers::pi))
    throw OutOfRange("phi = " + std::to_string(angles.phi) +
                     " outside [0, 2*pi)");

  const double ch = std::cos(angles.theta / 2.0);
  const double sh = std::sin(angles.theta / 2.0);
  const double off = 0.5 * std::sin(angles.theta);
  Mat2 m;
  m(0, 0) = cplx(ch * ch, 0.0);
  m(1, 1) = cplx(sh * sh, 0.0);
  m(0, 1) = off * cplx(std::cos(angles.phi), -std::sin(angles.phi));
  m(1, 0) = std::conj(m(0, 1));
  return QubitState(m);
}

double fidelity(const QubitState& rho, const QubitState& sigma) {
  // Determinants inside the rounding band are zeroed outright: a pure state
  // lands at |det| ~ 1e-17 in floating point, and sqrt would amplify that
  // noise into the 1e-9 range.
  auto checked_det = [](const QubitState& s) {
    double d = std::real(det(s.matrix()));
    if (d < -tol::kDetClamp)
      throw NegativeDet("determinant " + std::to_string(d) +
                        " below -1e-12");
    return d <= tol::kDetClamp ? 0.0 : d;
  };
  const double dr = checked_det(rho);
  const double ds = checked_det(sigma);
  const double overlap = std::real(trace(rho.matrix() * sigma.matrix()));
  return overlap + 2.0 * std::sqrt(dr * ds);
}

double l1_coherence(const QubitState& rho) {
  return 2.0 * std::abs(rho.element(0, 1));
}

QubitState random_state(std::uint64_t seed, std::uint64_t index) {
  const double u1 = rng::u01_at(seed, 3 * index);
  const double u2 = rng::u01_at(seed, 3 * index + 1);
  const double u3 = rng::u01_at(seed, 3 * index + 2);
  const double radius = std::cbrt(u1);
  const double cz = 2.0 * u2 - 1.0;
  const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
  const double phi = 2.0 * std::numbers::pi * u3;
  return bloch_to_density({radius * sz * std::cos(phi),
                           radius * sz * std::sin(phi), radius * cz});
}

}  // namespace qchan
