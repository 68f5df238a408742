#include "qchan/channel.hpp"

#include <cmath>
#include <string>

#include "qchan/errors.hpp"

namespace qchan {

KrausChannel::KrausChannel(std::vector<Mat2> operators)
    : ops_(std::move(operators)) {
  if (ops_.empty())
    throw OutOfRange("a Kraus channel needs at least one operator");
}

namespace {

void require_complete(const KrausChannel& channel) {
  const double res = completeness_residual(channel);
  if (res > tol::kCompleteness)
    throw IncompleteKraus("completeness residual " + std::to_string(res) +
                          " exceeds 1e-9");
}

}  // namespace

double completeness_residual(const KrausChannel& channel) {
  Mat2 sum;
  for (const Mat2& m : channel.operators()) sum = sum + adjoint(m) * m;
  return frobenius_norm(sum - kIdentity2);
}

bool check_completeness(const KrausChannel& channel, double tolerance) {
  return completeness_residual(channel) <= tolerance;
}

Mat2 apply_to_matrix(const KrausChannel& channel, const Mat2& x) {
  Mat2 out;
  for (const Mat2& m : channel.operators()) out = out + m * x * adjoint(m);
  return out;
}

QubitState apply(const KrausChannel& channel, const QubitState& rho) {
  require_complete(channel);
  return QubitState(apply_to_matrix(channel, rho.matrix()));
}

ChoiMatrix::ChoiMatrix(const std::array<cplx, 16>& elements) : e_(elements) {
  double err = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = r; c < 4; ++c)
      err = std::max(err, std::abs(e_[4 * r + c] - std::conj(e_[4 * c + r])));
  if (err > tol::kChoiHermitian)
    throw InvalidState("Choi matrix not Hermitian (deviation " +
                       std::to_string(err) + ")");
}

double ChoiMatrix::trace_real() const {
  return std::real(e_[0] + e_[5] + e_[10] + e_[15]);
}

std::array<double, 4> ChoiMatrix::eigenvalues() const {
  // Embed the Hermitian matrix H = Re + i*Im into the real symmetric
  // [[Re, -Im], [Im, Re]]; its spectrum is that of H, doubled.
  double s[64] = {};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const cplx v = e_[4 * r + c];
      s[8 * r + c] = std::real(v);
      s[8 * r + (c + 4)] = -std::imag(v);
      s[8 * (r + 4) + c] = std::imag(v);
      s[8 * (r + 4) + (c + 4)] = std::real(v);
    }
  }
  double ev[8];
  jacobi_eigen_sym(s, 8, ev);
  return {0.5 * (ev[0] + ev[1]), 0.5 * (ev[2] + ev[3]),
          0.5 * (ev[4] + ev[5]), 0.5 * (ev[6] + ev[7])};
}

ChoiMatrix choi_matrix(const KrausChannel& channel) {
  // (Phi x id)(|Omega><Omega|) = sum_k v_k v_k^dag with v_k the row-major
  // flattening of M_k.
  std::array<cplx, 16> c{};
  for (const Mat2& m : channel.operators()) {
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) c[4 * r + s] += m.e[r] * std::conj(m.e[s]);
  }
  return ChoiMatrix(c);
}

bool is_cptp(const KrausChannel& channel) {
  if (!check_completeness(channel, tol::kCompleteness)) return false;
  const auto ev = choi_matrix(channel).eigenvalues();
  return ev[3] >= -tol::kChoiPsd;
}

AffineRep affine_rep(const KrausChannel& channel) {
  require_complete(channel);
  const Mat2 paulis[3] = {kPauliX, kPauliY, kPauliZ};

  AffineRep rep;
  for (int j = 0; j < 3; ++j) {
    const Mat2 image = apply_to_matrix(channel, paulis[j]);
    for (int i = 0; i < 3; ++i)
      rep.a(i, j) = 0.5 * std::real(trace(paulis[i] * image));
  }
  const Mat2 unit_image = apply_to_matrix(channel, kIdentity2);
  rep.b = {0.5 * std::real(trace(kPauliX * unit_image)),
           0.5 * std::real(trace(kPauliY * unit_image)),
           0.5 * std::real(trace(kPauliZ * unit_image))};
  return rep;
}

bool is_unital(const KrausChannel& channel) {
  return norm(affine_rep(channel).b) <= tol::kUnital;
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  require_complete(second);
  require_complete(first);
  std::vector<Mat2> ops;
  ops.reserve(second.size() * first.size());
  for (const Mat2& m2 : second.operators())
    for (const Mat2& m1 : first.operators()) ops.push_back(m2 * m1);
  return KrausChannel(std::move(ops));
}

}  // namespace qchan
