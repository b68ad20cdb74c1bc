#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace gatelab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Library contract violations surface as typed exceptions so callers (CLI,
// tests) can map them to exit codes and messages.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class validation_error : public error {
 public:
  using error::error;
};

class precondition_error : public error {
 public:
  using error::error;
};

class resource_error : public error {
 public:
  using error::error;
};

class numeric_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(int line, int col, const std::string& what)
      : error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Dense 4x4 complex matrix, row-major.
struct Matrix4 {
  std::array<cplx, 16> a{};

  cplx& operator()(int r, int c) { return a[4 * r + c]; }
  const cplx& operator()(int r, int c) const { return a[4 * r + c]; }

  static Matrix4 zero() { return Matrix4{}; }

  static Matrix4 identity() {
    Matrix4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  Matrix4 adjoint() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx trace() const { return a[0] + a[5] + a[10] + a[15]; }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& z : a) m = std::max(m, std::abs(z));
    return m;
  }

  double frob_norm() const {
    double s = 0.0;
    for (const cplx& z : a) s += std::norm(z);
    return std::sqrt(s);
  }

  bool is_finite() const {
    for (const cplx& z : a)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }
};

inline Matrix4 operator+(const Matrix4& x, const Matrix4& y) {
  Matrix4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

inline Matrix4 operator-(const Matrix4& x, const Matrix4& y) {
  Matrix4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

inline Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const cplx xik = x(i, k);
      if (xik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

inline Matrix4 operator*(const cplx& s, const Matrix4& x) {
  Matrix4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}

inline Matrix4 operator*(double s, const Matrix4& x) {
  return cplx(s, 0.0) * x;
}

inline double max_abs_diff(const Matrix4& x, const Matrix4& y) {
  double m = 0.0;
  for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

inline double unitarity_violation(const Matrix4& m) {
  return max_abs_diff(m.adjoint() * m, Matrix4::identity());
}

inline double hermiticity_violation(const Matrix4& m) {
  return max_abs_diff(m, m.adjoint());
}

// A 4x4 complex matrix certified unitary at construction.
class Unitary4 {
 public:
  explicit Unitary4(const Matrix4& m) : m_(m) {
    if (!m.is_finite())
      throw validation_error("unitary construction: non-finite entries");
    const double v = unitarity_violation(m);
    if (v > 1e-10)
      throw validation_error(
          "unitary construction: max |u'u - I| = " + std::to_string(v) +
          " exceeds 1e-10");
  }

  const Matrix4& m() const { return m_; }
  const cplx& operator()(int r, int c) const { return m_(r, c); }

 private:
  Matrix4 m_;
};

// A 4x4 complex matrix certified Hermitian at construction.
class Hermitian4 {
 public:
  Hermitian4() : m_(Matrix4::zero()) {}

  explicit Hermitian4(const Matrix4& m) : m_(m) {
    if (!m.is_finite())
      throw validation_error("hermitian construction: non-finite entries");
    const double v = hermiticity_violation(m);
    if (v > 1e-10)
      throw validation_error(
          "hermitian construction: max |h - h'| = " + std::to_string(v) +
          " exceeds 1e-10");
  }

  const Matrix4& m() const { return m_; }
  const cplx& operator()(int r, int c) const { return m_(r, c); }

  double trace_real() const { return m_.trace().real(); }
  double frob_norm() const { return m_.frob_norm(); }

 private:
  Matrix4 m_;
};

inline Hermitian4 operator+(const Hermitian4& x, const Hermitian4& y) {
  return Hermitian4(x.m() + y.m());
}

inline Hermitian4 operator-(const Hermitian4& x, const Hermitian4& y) {
  return Hermitian4(x.m() - y.m());
}

inline Hermitian4 operator*(double s, const Hermitian4& x) {
  return Hermitian4(s * x.m());
}

// Coefficients of a Hermitian4 against the orthonormal two-qubit product
// basis, 16 reals ordered row-major by basis index pair.
using CoeffVector16 = std::array<double, 16>;

inline double coeff_dot(const CoeffVector16& x, const CoeffVector16& y) {
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += x[i] * y[i];
  return s;
}

inline double coeff_norm(const CoeffVector16& x) {
  return std::sqrt(coeff_dot(x, x));
}

// Real 16x16 matrix whose rows are coefficient vectors.
struct Matrix16 {
  std::array<CoeffVector16, 16> rows{};

  double& operator()(int r, int c) { return rows[r][c]; }
  const double& operator()(int r, int c) const { return rows[r][c]; }

  bool is_finite() const {
    for (const auto& row : rows)
      for (double v : row)
        if (!std::isfinite(v)) return false;
    return true;
  }
};

}  // namespace gatelab
