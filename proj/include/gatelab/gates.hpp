#pragma once

#include <array>
#include <cmath>

#include "gatelab/core.hpp"

namespace gatelab {

// Named gate constructors. Basis order is |00>, |01>, |10>, |11> with the
// first qubit owning the high bit.

inline Unitary4 gate_identity() { return Unitary4(Matrix4::identity()); }

// Exchange of the two qubits: swaps |01> and |10>.
inline Unitary4 gate_swap() {
  Matrix4 m = Matrix4::zero();
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return Unitary4(m);
}

// Controlled-NOT with the first qubit as control.
inline Unitary4 gate_cnot() {
  Matrix4 m = Matrix4::zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return Unitary4(m);
}

// Controlled-Z.
inline Unitary4 gate_cz() {
  Matrix4 m = Matrix4::identity();
  m(3, 3) = -1.0;
  return Unitary4(m);
}

// Three-parameter controlled rotation family: identity on span{|00>,|01>},
// and on span{|10>,|11>} the block
//   [ e^{ia} cos t,          -i e^{i(a-f)} sin t ]
//   [ -i e^{i(a+f)} sin t,    e^{ia} cos t       ].
inline Unitary4 gate_barenco(double phi, double alpha, double theta) {
  Matrix4 m = Matrix4::zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  const cplx mi(0.0, -1.0);
  const double c = std::cos(theta), s = std::sin(theta);
  m(2, 2) = std::polar(1.0, alpha) * c;
  m(2, 3) = mi * std::polar(1.0, alpha - phi) * s;
  m(3, 2) = mi * std::polar(1.0, alpha + phi) * s;
  m(3, 3) = std::polar(1.0, alpha) * c;
  return Unitary4(m);
}

// diag(e^{i p0}, e^{i p1}, e^{i p2}, e^{i p3}).
inline Unitary4 gate_diag(const std::array<double, 4>& phases) {
  Matrix4 m = Matrix4::zero();
  for (int i = 0; i < 4; ++i) m(i, i) = std::polar(1.0, phases[i]);
  return Unitary4(m);
}

namespace detail {

// One-qubit unitary from ZYZ Euler angles and a global phase:
// e^{i delta} Rz(alpha) Ry(beta) Rz(gamma), with
// Rz(t) = diag(e^{-it/2}, e^{it/2}) and Ry(t) the real rotation by t/2.
inline std::array<cplx, 4> one_qubit_zyz(double alpha, double beta,
                                         double gamma, double delta) {
  const double cb = std::cos(beta / 2.0), sb = std::sin(beta / 2.0);
  const cplx g = std::polar(1.0, delta);
  std::array<cplx, 4> u;
  u[0] = g * std::polar(1.0, -(alpha + gamma) / 2.0) * cb;
  u[1] = -g * std::polar(1.0, -(alpha - gamma) / 2.0) * sb;
  u[2] = g * std::polar(1.0, (alpha - gamma) / 2.0) * sb;
  u[3] = g * std::polar(1.0, (alpha + gamma) / 2.0) * cb;
  return u;
}

}  // namespace detail

// Tensor product of two one-qubit unitaries, each given as ZYZ angles plus
// phase: (alpha1, beta1, gamma1, delta1, alpha2, beta2, gamma2, delta2).
inline Unitary4 gate_kron(const std::array<double, 8>& p) {
  const auto a = detail::one_qubit_zyz(p[0], p[1], p[2], p[3]);
  const auto b = detail::one_qubit_zyz(p[4], p[5], p[6], p[7]);
  Matrix4 m;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          m(2 * r1 + r2, 2 * c1 + c2) = a[2 * r1 + c1] * b[2 * r2 + c2];
  return Unitary4(m);
}

// Tensor product of two explicit one-qubit matrices (row-major 2x2).
inline Matrix4 kron2(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  Matrix4 m;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          m(2 * r1 + r2, 2 * c1 + c2) = a[2 * r1 + c1] * b[2 * r2 + c2];
  return m;
}

// 2x2 Pauli matrices, index 0..3 = I, X, Y, Z.
inline const std::array<cplx, 4>& pauli2(int j) {
  static const std::array<std::array<cplx, 4>, 4> s = {{
      {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)},
      {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)},
      {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)},
      {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)},
  }};
  return s[static_cast<std::size_t>(j)];
}

}  // namespace gatelab
