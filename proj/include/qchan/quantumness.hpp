#pragma once

#include <cstdint>

#include "qchan/channel.hpp"
#include "qchan/linalg.hpp"

namespace qchan {

/// The symmetric 3x3 matrix (A A^T + 5 B B^T) / 2 whose spectrum carries the
/// quantumness witness.
class LMatrix {
public:
  explicit LMatrix(const Mat3& m);  // rejects asymmetry > 1e-14

  const Mat3& matrix() const { return m_; }

private:
  Mat3 m_;
};

/// Eigenvalues sorted l1 >= l2 >= l3.
struct EigenTriple {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
};

struct FidelityEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
};

LMatrix l_matrix(const AffineRep& rep);

/// Descending eigenvalues of a symmetric matrix (asymmetry above 1e-12 is
/// rejected with NotSymmetric).  Cyclic Jacobi, off-diagonal norm <= 1e-14.
EigenTriple eigenvalues_desc(const Mat3& symmetric);
EigenTriple eigenvalues_desc(const LMatrix& m);

/// Full decomposition; columns of the returned matrix are the eigenvectors
/// matching the descending eigenvalue order.
std::pair<EigenTriple, Mat3> eigen_decomposition(const Mat3& symmetric);

/// Quantumness witness of a channel: l2 + l3 of its L matrix.
double quantumness(const KrausChannel& channel);

/// Average fidelity between pure inputs and channel outputs, uniform over
/// the Bloch sphere.  Closed form 1/2 + Tr(A)/6.
double average_fidelity_analytic(const KrausChannel& channel);

/// Monte Carlo estimate of the same average.  Sample i draws
/// z ~ U[-1, 1), phi ~ U[0, 2*pi) from a counter-based stream, so the
/// estimate is a pure function of (samples, seed) regardless of how many
/// worker threads run (threads = 0 picks the hardware count).
FidelityEstimate average_fidelity_mc(const KrausChannel& channel,
                                     long long samples, std::uint64_t seed,
                                     int threads = 0);

}  // namespace qchan
