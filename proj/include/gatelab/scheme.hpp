#pragma once

#include <array>
#include <cmath>

#include "gatelab/core.hpp"
#include "gatelab/gates.hpp"
#include "gatelab/linalg.hpp"

namespace gatelab {

// The 16-generator commutator scheme, its simpler variant, and the
// one-parameter determinant family with the interpolation-based degree
// check.

inline const Unitary4& twist() {
  static const Unitary4 t = gate_swap();
  return t;
}

// T h T: the generator seen with the two qubits exchanged.
inline Hermitian4 twist_conjugate(const Hermitian4& h) {
  const Matrix4& t = twist().m();
  return Hermitian4(t * h.m() * t);
}

// Generator indices are 1-based in the construction rules below, matching
// the recurrences they implement; generators[i] stores generator i+1.
struct GeneratorScheme {
  std::array<Hermitian4, 16> generators;
  Matrix16 coeff_matrix;                     // row i = coefficients of generators[i]
  double determinant = 0.0;
  std::array<double, 16> singular_values{};  // descending
  int rank = 0;
  int borderline_count = 0;
  double sv_ratio = 0.0;
};

namespace detail {

inline void finish_scheme(GeneratorScheme& s) {
  for (int i = 0; i < 16; ++i)
    s.coeff_matrix.rows[i] = pauli_coefficients(s.generators[i]);
  const RankAnalysis a = rank_analysis(s.coeff_matrix);
  s.determinant = a.determinant;
  s.singular_values = a.singular_values;
  s.rank = a.rank;
  s.borderline_count = a.borderline_count;
  s.sv_ratio = a.sv_ratio;
}

}  // namespace detail

// Generator 1 is h1, generator 2 its twist conjugate, generators 3..14
// nested commutators i[H_1, H_{j-1}], and generators 15, 16 the cross terms
// i[H_2, H_3] and i[H_2, H_5].
inline GeneratorScheme build_scheme(const Hermitian4& h1) {
  GeneratorScheme s;
  s.generators[0] = h1;
  s.generators[1] = twist_conjugate(h1);
  for (int j = 2; j <= 13; ++j)
    s.generators[j] = commutator_i(s.generators[0], s.generators[j - 1]);
  s.generators[14] = commutator_i(s.generators[1], s.generators[2]);
  s.generators[15] = commutator_i(s.generators[1], s.generators[4]);
  detail::finish_scheme(s);
  return s;
}

// The variant that keeps commuting against generator 1 all the way through
// generator 16, with no cross terms.
inline GeneratorScheme build_simple_scheme(const Hermitian4& h1) {
  GeneratorScheme s;
  s.generators[0] = h1;
  s.generators[1] = twist_conjugate(h1);
  for (int j = 2; j <= 15; ++j)
    s.generators[j] = commutator_i(s.generators[0], s.generators[j - 1]);
  detail::finish_scheme(s);
  return s;
}

// Determinant of the scheme built from the interpolated generator
// h1 + k (h1A - h1).
inline double delta_of_k(const Hermitian4& h1, const Hermitian4& h1A, double k) {
  Matrix4 m;
  for (int i = 0; i < 16; ++i)
    m.a[i] = h1.m().a[i] + k * (h1A.m().a[i] - h1.m().a[i]);
  return build_scheme(Hermitian4(m)).determinant;
}

struct PolynomialDegreeReport {
  bool is_polynomial_deg_le_100 = false;
  double max_relative_residual = 0.0;
  bool degenerate_family = false;  // h1 = h1A, or every sample vanished
};

// Samples the determinant family at the 101 Chebyshev-Lobatto nodes on
// [-1, 1], interpolates with the degree-100 barycentric form, and compares
// against direct evaluation at 20 held-out midpoints. A family that truly
// is a polynomial of degree at most 100 reproduces the held-out values up
// to conditioning noise at this degree; tolerance 1e-3 relative.
inline PolynomialDegreeReport verify_polynomial_degree(const Hermitian4& h1,
                                                       const Hermitian4& h1A) {
  PolynomialDegreeReport rep;
  if (max_abs_diff(h1.m(), h1A.m()) <= 1e-14) {
    rep.degenerate_family = true;
    return rep;
  }

  constexpr int kN = 100;  // polynomial degree bound; kN+1 nodes
  std::array<double, kN + 1> node{}, f{}, w{};
  bool any_nonzero = false;
  for (int j = 0; j <= kN; ++j) {
    node[j] = std::cos(kPi * j / kN);
    f[j] = delta_of_k(h1, h1A, node[j]);
    if (f[j] != 0.0) any_nonzero = true;
    w[j] = (j % 2 == 0 ? 1.0 : -1.0);
    if (j == 0 || j == kN) w[j] *= 0.5;
  }
  if (!any_nonzero) {
    rep.degenerate_family = true;
    return rep;
  }

  auto interpolate = [&](double t) {
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= kN; ++j) {
      const double d = t - node[j];
      if (std::abs(d) < 1e-15) return f[j];
      const double q = w[j] / d;
      num += q * f[j];
      den += q;
    }
    return num / den;
  };

  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t = -1.0 + 2.0 * (i + 0.5) / 20.0;
    const double direct = delta_of_k(h1, h1A, t);
    const double fitted = interpolate(t);
    worst = std::max(worst, std::abs(fitted - direct));
    scale = std::max(scale, std::abs(direct));
  }
  rep.max_relative_residual =
      scale > 0.0 ? worst / scale : (worst == 0.0 ? 0.0 : 1e300);
  rep.is_polynomial_deg_le_100 = rep.max_relative_residual <= 1e-3;
  return rep;
}

}  // namespace gatelab
