#pragma once

#include <array>
#include <vector>

#include "qchan/linalg.hpp"
#include "qchan/qubit_state.hpp"

namespace qchan {

namespace tol {
inline constexpr double kCompleteness = 1e-9;  // gate for applying a channel
inline constexpr double kChoiPsd = 1e-10;      // Choi eigenvalues >= -kChoiPsd
inline constexpr double kChoiHermitian = 1e-12;
inline constexpr double kUnital = 1e-10;       // |B| <= kUnital
}  // namespace tol

/// A qubit channel in operator-sum form, rho -> sum_k M_k rho M_k^dag.
/// Construction only requires a nonempty operator list; completeness is
/// checked where the channel is used, so deliberately broken sets can be
/// built and diagnosed.
class KrausChannel {
public:
  explicit KrausChannel(std::vector<Mat2> operators);

  const std::vector<Mat2>& operators() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

private:
  std::vector<Mat2> ops_;
};

/// Action on Bloch vectors: xi' = A xi + B.
struct AffineRep {
  Mat3 a;
  Vec3 b;
};

/// Choi matrix in the unnormalized convention (trace 2 for trace-preserving
/// channels): the channel acting on one half of |00> + |11>.
class ChoiMatrix {
public:
  explicit ChoiMatrix(const std::array<cplx, 16>& elements);

  const std::array<cplx, 16>& elements() const { return e_; }
  cplx operator()(int r, int c) const { return e_[4 * r + c]; }
  double trace_real() const;

  /// All four eigenvalues, descending.
  std::array<double, 4> eigenvalues() const;

private:
  std::array<cplx, 16> e_;
};

/// Frobenius norm of sum_k M_k^dag M_k - I.
double completeness_residual(const KrausChannel& channel);

bool check_completeness(const KrausChannel& channel, double tolerance);

/// Linear extension sum_k M_k X M_k^dag to arbitrary 2x2 inputs.
/// No completeness gate; used for affine extraction and linearity checks.
Mat2 apply_to_matrix(const KrausChannel& channel, const Mat2& x);

/// Applies the channel to a state.  Throws IncompleteKraus when the
/// completeness residual exceeds 1e-9.
QubitState apply(const KrausChannel& channel, const QubitState& rho);

ChoiMatrix choi_matrix(const KrausChannel& channel);

/// Choi positivity (eigenvalues >= -1e-10) plus completeness at 1e-9.
bool is_cptp(const KrausChannel& channel);

/// Extracts (A, B) from Pauli traces: A_ij = Tr[s_i Phi(s_j)]/2,
/// B_i = Tr[s_i Phi(I)]/2.
AffineRep affine_rep(const KrausChannel& channel);

/// True when Phi(I) = I, i.e. |B| <= 1e-10.
bool is_unital(const KrausChannel& channel);

/// Kraus set {M2_j M1_i}; acts as `second` after `first`.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

}  // namespace qchan
