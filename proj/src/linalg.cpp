#include "qchan/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace qchan {

namespace {

constexpr int kMaxDim = 8;
constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const double* a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
  return std::sqrt(s);
}

}  // namespace

void jacobi_eigen_sym(const double* a_in, int n, double* evals, double* evecs,
                      double off_tol) {
  assert(n >= 1 && n <= kMaxDim);

  double a[kMaxDim * kMaxDim];
  double v[kMaxDim * kMaxDim];
  std::copy(a_in, a_in + n * n, a);
  std::fill(v, v + n * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= off_tol) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;

        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a[r * n + p];
            const double arq = a[r * n + q];
            a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
            a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
          }
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = vrp - s * (vrq + tau * vrp);
          v[r * n + q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  int order[kMaxDim];
  std::iota(order, order + n, 0);
  std::sort(order, order + n,
            [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });

  for (int i = 0; i < n; ++i) evals[i] = a[order[i] * n + order[i]];
  if (evecs != nullptr) {
    for (int r = 0; r < n; ++r)
      for (int i = 0; i < n; ++i) evecs[r * n + i] = v[r * n + order[i]];
  }
}

}  // namespace qchan
