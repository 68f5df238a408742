#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qchan {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Real 3-vector
// ---------------------------------------------------------------------------

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm_squared(const Vec3& a) { return dot(a, a); }

inline double norm(const Vec3& a) { return std::sqrt(norm_squared(a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}

// ---------------------------------------------------------------------------
// Complex 2x2 matrix, row-major
// ---------------------------------------------------------------------------

struct Mat2 {
  std::array<cplx, 4> e{};

  cplx& operator()(int r, int c) { return e[2 * r + c]; }
  const cplx& operator()(int r, int c) const { return e[2 * r + c]; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline Mat2 operator*(const cplx& s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
  return r;
}

inline Mat2 operator*(double s, const Mat2& a) { return cplx(s, 0.0) * a; }

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  r.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
  r.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
  r.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
  r.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
  return r;
}

inline Mat2 adjoint(const Mat2& a) {
  Mat2 r;
  r.e[0] = std::conj(a.e[0]);
  r.e[1] = std::conj(a.e[2]);
  r.e[2] = std::conj(a.e[1]);
  r.e[3] = std::conj(a.e[3]);
  return r;
}

inline cplx trace(const Mat2& a) { return a.e[0] + a.e[3]; }

inline cplx det(const Mat2& a) { return a.e[0] * a.e[3] - a.e[1] * a.e[2]; }

inline double frobenius_norm(const Mat2& a) {
  double s = 0.0;
  for (const cplx& v : a.e) s += std::norm(v);
  return std::sqrt(s);
}

/// Largest absolute deviation from Hermiticity, max_ij |a_ij - conj(a_ji)|.
inline double hermiticity_error(const Mat2& a) {
  double err = std::abs(a.e[1] - std::conj(a.e[2]));
  err = std::max(err, std::abs(a.e[0] - std::conj(a.e[0])));
  err = std::max(err, std::abs(a.e[3] - std::conj(a.e[3])));
  return err;
}

/// Eigenvalues of a Hermitian 2x2 matrix, descending.  Uses the closed form
/// tr/2 +- sqrt(tr^2/4 - det); the discriminant is clamped at zero.
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& a) {
  const double tr = std::real(trace(a));
  const double dt = std::real(det(a));
  const double disc = std::max(0.0, tr * tr / 4.0 - dt);
  const double root = std::sqrt(disc);
  return {tr / 2.0 + root, tr / 2.0 - root};
}

inline constexpr Mat2 kIdentity2{{cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)}};
inline constexpr Mat2 kPauliX{{cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)}};
inline constexpr Mat2 kPauliY{{cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)}};
inline constexpr Mat2 kPauliZ{{cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)}};

// ---------------------------------------------------------------------------
// Real 3x3 matrix, row-major
// ---------------------------------------------------------------------------

struct Mat3 {
  std::array<double, 9> e{};

  double& operator()(int r, int c) { return e[3 * r + c]; }
  const double& operator()(int r, int c) const { return e[3 * r + c]; }

  static Mat3 identity() {
    Mat3 m;
    m.e = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return m;
  }

  static Mat3 diagonal(double a, double b, double c) {
    Mat3 m;
    m.e = {a, 0, 0, 0, b, 0, 0, 0, c};
    return m;
  }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.e[i] = s * a.e[i];
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

inline double trace(const Mat3& a) { return a.e[0] + a.e[4] + a.e[8]; }

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

/// Largest absolute asymmetry, max_ij |a_ij - a_ji|.
inline double asymmetry(const Mat3& a) {
  double err = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      err = std::max(err, std::abs(a(i, j) - a(j, i)));
  return err;
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver for small real symmetric matrices
// ---------------------------------------------------------------------------

/// Diagonalizes the symmetric n x n matrix `a` (row-major, n <= 8) by cyclic
/// Jacobi rotations, sweeping until the off-diagonal Frobenius norm falls
/// below `off_tol`.  Eigenvalues are written descending to `evals`; when
/// `evecs` is non-null it receives the matching eigenvectors as columns of a
/// row-major n x n matrix.
void jacobi_eigen_sym(const double* a, int n, double* evals,
                      double* evecs = nullptr, double off_tol = 1e-14);

}  // namespace qchan
