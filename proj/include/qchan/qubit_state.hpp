#pragma once

#include <cstdint>

#include "qchan/linalg.hpp"

namespace qchan {

/// Validation tolerances for qubit states and Bloch vectors.
namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-12;      // eigenvalues >= -kPsd
inline constexpr double kDetClamp = 1e-12; // determinants in [-kDetClamp, 0) -> 0
inline constexpr double kBlochBall = 1e-9; // |xi|^2 <= 1 + kBlochBall accepted
}  // namespace tol

using BlochVector = Vec3;

/// Pure-state angles, theta in [0, pi], phi in [0, 2*pi).
struct PureAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Qubit density matrix: Hermitian, unit trace, positive semidefinite
/// (each within the tolerances above, checked on construction).
class QubitState {
public:
  explicit QubitState(const Mat2& elements);

  const Mat2& matrix() const { return m_; }
  cplx element(int r, int c) const { return m_(r, c); }

  /// Tr[rho^2]; equals 1 for pure states, 1/2 for the maximally mixed state.
  double purity() const;

private:
  Mat2 m_;
};

/// rho = (I + x*sx + y*sy + z*sz) / 2.  Vectors with |xi|^2 in
/// (1, 1 + 1e-9] are pulled back onto the unit sphere; anything longer is
/// rejected with InvalidBloch.
QubitState bloch_to_density(const BlochVector& v);

/// Component i is Tr[sigma_i rho].
BlochVector density_to_bloch(const QubitState& rho);

/// [[cos^2(th/2), e^{-i phi} sin(th)/2], [e^{i phi} sin(th)/2, sin^2(th/2)]]
QubitState pure_state(const PureAngles& angles);

/// F(rho, rho') = Tr[rho rho'] + 2 sqrt(det rho * det rho').
double fidelity(const QubitState& rho, const QubitState& sigma);

/// l1 coherence in the computational basis: 2 |rho_01|.
double l1_coherence(const QubitState& rho);

/// Deterministic random mixed state: index-th draw of stream `seed`,
/// uniform over the Bloch ball.
QubitState random_state(std::uint64_t seed, std::uint64_t index);

}  // namespace qchan
