#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "gatelab/core.hpp"
#include "gatelab/eigen.hpp"

namespace gatelab {

// Matrix logarithm, exponential, commutators, the Pauli-product coefficient
// basis, and rank analysis of 16x16 coefficient matrices.

// Hermitian logarithm of a unitary: u = exp(i h) with the eigenphases of h
// on the principal branch (-pi, pi]. An eigenvalue exactly at -1 maps to
// phase +pi.
inline Hermitian4 log_unitary(const Unitary4& u) {
  const UnitaryEig e = unitary_eig(u.m());
  Matrix4 h;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cplx s(0.0, 0.0);
      for (int j = 0; j < 4; ++j)
        s += e.phases[j] * e.vectors(r, j) * std::conj(e.vectors(c, j));
      h(r, c) = s;
    }
  for (int r = 0; r < 4; ++r)
    for (int c = r; c < 4; ++c) {
      const cplx avg = 0.5 * (h(r, c) + std::conj(h(c, r)));
      h(r, c) = avg;
      h(c, r) = std::conj(avg);
    }
  return Hermitian4(h);
}

// exp(i h) for Hermitian h, via eigendecomposition.
inline Unitary4 exp_hermitian(const Hermitian4& h) {
  const HermitianEig4 e = eig_hermitian4(h.m());
  std::array<cplx, 4> lam;
  for (int j = 0; j < 4; ++j) lam[j] = std::polar(1.0, e.eigenvalues[j]);
  Matrix4 u;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cplx s(0.0, 0.0);
      for (int j = 0; j < 4; ++j)
        s += lam[j] * e.vectors(r, j) * std::conj(e.vectors(c, j));
      u(r, c) = s;
    }
  return Unitary4(u);
}

// i(ab - ba), Hermitian when a and b are.
inline Hermitian4 commutator_i(const Hermitian4& a, const Hermitian4& b) {
  const Matrix4 ab = a.m() * b.m();
  Matrix4 h;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      h(r, c) = cplx(0.0, 1.0) * (ab(r, c) - std::conj(ab(c, r)));
  // i(ab - (ab)') is exactly Hermitian up to roundoff; clean the roundoff.
  for (int r = 0; r < 4; ++r)
    for (int c = r; c < 4; ++c) {
      const cplx avg = 0.5 * (h(r, c) + std::conj(h(c, r)));
      h(r, c) = avg;
      h(c, r) = std::conj(avg);
    }
  return Hermitian4(h);
}

namespace detail {

inline const std::array<Matrix4, 16>& pauli_basis() {
  static const std::array<Matrix4, 16> basis = [] {
    std::array<Matrix4, 4> sigma;
    sigma[0] = Matrix4::zero();
    sigma[1] = Matrix4::zero();
    sigma[2] = Matrix4::zero();
    sigma[3] = Matrix4::zero();
    // 2x2 Paulis embedded as the upper-left block of a Matrix4 scratch.
    auto set2 = [](Matrix4& m, cplx a, cplx b, cplx c, cplx d) {
      m(0, 0) = a;
      m(0, 1) = b;
      m(1, 0) = c;
      m(1, 1) = d;
    };
    set2(sigma[0], 1, 0, 0, 1);
    set2(sigma[1], 0, 1, 1, 0);
    set2(sigma[2], 0, cplx(0, -1), cplx(0, 1), 0);
    set2(sigma[3], 1, 0, 0, -1);
    std::array<Matrix4, 16> out;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Matrix4 b;
        for (int r1 = 0; r1 < 2; ++r1)
          for (int c1 = 0; c1 < 2; ++c1)
            for (int r2 = 0; r2 < 2; ++r2)
              for (int c2 = 0; c2 < 2; ++c2)
                b(2 * r1 + r2, 2 * c1 + c2) =
                    0.5 * sigma[j](r1, c1) * sigma[k](r2, c2);
        out[4 * j + k] = b;
      }
    return out;
  }();
  return basis;
}

}  // namespace detail

// Basis element B_{jk} = (sigma_j x sigma_k)/2 at row-major index 4j+k.
// The family is orthonormal under the Hilbert-Schmidt inner product.
inline const Matrix4& pauli_basis_element(int index) {
  return detail::pauli_basis()[static_cast<std::size_t>(index)];
}

// Components of h against the B_{jk} basis: c_{jk} = Tr(B_{jk} h), real
// because both factors are Hermitian.
inline CoeffVector16 pauli_coefficients(const Hermitian4& h) {
  CoeffVector16 c{};
  for (int n = 0; n < 16; ++n) {
    const Matrix4& b = pauli_basis_element(n);
    cplx tr(0.0, 0.0);
    for (int r = 0; r < 4; ++r)
      for (int k = 0; k < 4; ++k) tr += b(r, k) * h.m()(k, r);
    c[n] = tr.real();
  }
  return c;
}

// Inverse of pauli_coefficients: sum of c_{jk} B_{jk}.
inline Hermitian4 reconstruct_hermitian(const CoeffVector16& c) {
  Matrix4 h = Matrix4::zero();
  for (int n = 0; n < 16; ++n) {
    const Matrix4& b = pauli_basis_element(n);
    for (int i = 0; i < 16; ++i) h.a[i] += c[n] * b.a[i];
  }
  return Hermitian4(h);
}

struct RankAnalysis {
  double determinant = 0.0;
  std::array<double, 16> singular_values{};  // descending
  int rank = 0;              // count of sigma_i with sigma_i/sigma_1 > 1e-7
  int borderline_count = 0;  // count with sigma_i/sigma_1 in [1e-10, 1e-7]
  double sv_ratio = 0.0;     // sigma_16/sigma_1, 0 when sigma_1 = 0
};

inline RankAnalysis rank_analysis(const Matrix16& m) {
  if (!m.is_finite()) throw validation_error("rank_analysis: non-finite entries");
  RankAnalysis out;
  out.determinant = lu_det_16(m);
  out.singular_values = singular_values_16(m);
  const double s1 = out.singular_values[0];
  if (s1 > 0.0) {
    for (double s : out.singular_values) {
      const double rel = s / s1;
      if (rel > 1e-7) ++out.rank;
      if (rel >= 1e-10 && rel <= 1e-7) ++out.borderline_count;
    }
    out.sv_ratio = out.singular_values[15] / s1;
  }
  return out;
}

// Operator distance sqrt(max(0, 1 - Re Tr(p'q)/4)). Sensitive to global
// phase by construction. For unitary arguments this equals the Frobenius
// norm of p - q over sqrt(8); evaluating it that way avoids the trace
// form's catastrophic cancellation, which floors near-zero distances at
// the 1e-8 level instead of resolving them.
inline double distance(const Unitary4& p, const Unitary4& q) {
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += std::norm(p.m().a[i] - q.m().a[i]);
  return std::sqrt(s / 8.0);
}

}  // namespace gatelab
