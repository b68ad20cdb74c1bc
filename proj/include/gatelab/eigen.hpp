#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gatelab/core.hpp"

namespace gatelab {

// In-repo dense solvers for the fixed sizes this library needs: cyclic
// complex Jacobi for Hermitian matrices up to 16x16, a commuting-parts
// eigendecomposition for 4x4 unitaries, one-sided Jacobi orthogonalization
// for real 16-dim column sets, and LU determinants for 16x16 real matrices.

namespace detail {

// Cyclic complex Jacobi. A is n x n Hermitian, row-major; on return A is
//(numerically) diagonal, eval holds eigenvalues ascending and the columns
// of V are the matching orthonormal eigenvectors.
inline void jacobi_hermitian(int n, std::vector<cplx>& A, std::vector<cplx>& V,
                             std::vector<double>& eval) {
  auto at = [&](int r, int c) -> cplx& { return A[r * n + c]; };
  V.assign(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
  for (int i = 0; i < n; ++i) V[static_cast<std::size_t>(i) * n + i] = 1.0;

  double frob = 0.0;
  for (const cplx& z : A) frob += std::norm(z);
  frob = std::sqrt(frob);
  if (frob == 0.0) {
    eval.assign(n, 0.0);
    return;
  }

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    off = std::sqrt(2.0 * off);
    if (off <= 1e-15 * frob) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = at(p, q);
        const double m = std::abs(apq);
        if (m <= 1e-18 * frob) continue;

        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const cplx e = apq / m;
        const double tau = (aqq - app) / (2.0 * m);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Combined phase and plane rotation G with columns (p, q):
        // G(p,p)=c, G(p,q)=s, G(q,p)=-s*conj(e), G(q,q)=c*conj(e).
        const cplx gpp(c, 0.0), gpq(s, 0.0);
        const cplx gqp = -s * std::conj(e);
        const cplx gqq = c * std::conj(e);

        for (int r = 0; r < n; ++r) {  // A <- A G
          const cplx xp = at(r, p), xq = at(r, q);
          at(r, p) = xp * gpp + xq * gqp;
          at(r, q) = xp * gpq + xq * gqq;
        }
        for (int r = 0; r < n; ++r) {  // A <- G' A
          const cplx xp = at(p, r), xq = at(q, r);
          at(p, r) = std::conj(gpp) * xp + std::conj(gqp) * xq;
          at(q, r) = std::conj(gpq) * xp + std::conj(gqq) * xq;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = cplx(at(p, p).real(), 0.0);
        at(q, q) = cplx(at(q, q).real(), 0.0);

        for (int r = 0; r < n; ++r) {  // V <- V G
          cplx& vp = V[static_cast<std::size_t>(r) * n + p];
          cplx& vq = V[static_cast<std::size_t>(r) * n + q];
          const cplx xp = vp, xq = vq;
          vp = xp * gpp + xq * gqp;
          vq = xp * gpq + xq * gqq;
        }
      }
    }
  }

  eval.resize(n);
  for (int i = 0; i < n; ++i) eval[i] = at(i, i).real();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return eval[x] < eval[y]; });
  std::vector<double> ev(n);
  std::vector<cplx> W(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    ev[j] = eval[order[j]];
    for (int r = 0; r < n; ++r)
      W[static_cast<std::size_t>(r) * n + j] =
          V[static_cast<std::size_t>(r) * n + order[j]];
  }
  eval = std::move(ev);
  V = std::move(W);
}

}  // namespace detail

struct HermitianEig4 {
  std::array<double, 4> eigenvalues{};  // ascending
  Matrix4 vectors;                      // column j pairs with eigenvalues[j]
};

inline HermitianEig4 eig_hermitian4(const Matrix4& h) {
  std::vector<cplx> A(h.a.begin(), h.a.end());
  std::vector<cplx> V;
  std::vector<double> ev;
  detail::jacobi_hermitian(4, A, V, ev);
  HermitianEig4 out;
  for (int i = 0; i < 4; ++i) out.eigenvalues[i] = ev[i];
  for (int i = 0; i < 16; ++i) out.vectors.a[i] = V[i];
  return out;
}

struct UnitaryEig {
  std::array<double, 4> phases{};  // in (-pi, pi], ascending
  Matrix4 vectors;                 // column j pairs with phases[j]
};

namespace detail {

// Eigendecomposition of a (near-)normal matrix u through its commuting
// Hermitian parts B = (u+u')/2 and C = (u-u')/(2i). The primary matrix
// B + mix*C is diagonalized first; eigenvalue clusters are then split by
// diagonalizing C restricted to the cluster. Returns the worst residual
// max_j |u v_j - lambda_j v_j|.
inline double unitary_eig_attempt(const Matrix4& u, double mix,
                                  UnitaryEig& out) {
  const Matrix4 ud = u.adjoint();
  Matrix4 B, C;
  for (int i = 0; i < 16; ++i) {
    B.a[i] = 0.5 * (u.a[i] + ud.a[i]);
    C.a[i] = (u.a[i] - ud.a[i]) / cplx(0.0, 2.0);
  }
  Matrix4 P;
  for (int i = 0; i < 16; ++i) P.a[i] = B.a[i] + mix * C.a[i];

  std::vector<cplx> A(P.a.begin(), P.a.end());
  std::vector<cplx> V;
  std::vector<double> ev;
  jacobi_hermitian(4, A, V, ev);

  Matrix4 W;
  for (int i = 0; i < 16; ++i) W.a[i] = V[i];

  // Split clusters of the primary spectrum with the refiner C.
  int start = 0;
  while (start < 4) {
    int end = start + 1;
    while (end < 4 && ev[end] - ev[end - 1] <= 1e-8) ++end;
    const int k = end - start;
    if (k > 1) {
      std::vector<cplx> Cb(static_cast<std::size_t>(k) * k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          cplx s(0.0, 0.0);
          for (int r = 0; r < 4; ++r) {
            cplx cw(0.0, 0.0);
            for (int c = 0; c < 4; ++c) cw += C(r, c) * W(c, start + j);
            s += std::conj(W(r, start + i)) * cw;
          }
          Cb[static_cast<std::size_t>(i) * k + j] = s;
        }
      }
      // Symmetrize away roundoff before the inner Jacobi pass.
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
          const cplx avg = 0.5 * (Cb[static_cast<std::size_t>(i) * k + j] +
                                  std::conj(Cb[static_cast<std::size_t>(j) * k + i]));
          Cb[static_cast<std::size_t>(i) * k + j] = avg;
          Cb[static_cast<std::size_t>(j) * k + i] = std::conj(avg);
        }
      std::vector<cplx> R;
      std::vector<double> cev;
      jacobi_hermitian(k, Cb, R, cev);
      Matrix4 Wn = W;
      for (int r = 0; r < 4; ++r) {
        for (int j = 0; j < k; ++j) {
          cplx s(0.0, 0.0);
          for (int i = 0; i < k; ++i)
            s += W(r, start + i) * R[static_cast<std::size_t>(i) * k + j];
          Wn(r, start + j) = s;
        }
      }
      W = Wn;
    }
    start = end;
  }

  // Rayleigh quotients on u give the eigenvalues; their arguments are the
  // eigenphases. The principal branch is (-pi, pi] and a phase landing on
  // the cut maps to +pi.
  std::array<double, 4> phases{};
  for (int j = 0; j < 4; ++j) {
    cplx lam(0.0, 0.0);
    for (int r = 0; r < 4; ++r) {
      cplx uv(0.0, 0.0);
      for (int c = 0; c < 4; ++c) uv += u(r, c) * W(c, j);
      lam += std::conj(W(r, j)) * uv;
    }
    double ph = std::atan2(lam.imag(), lam.real());
    if (ph <= -kPi + 1e-12) ph = kPi;
    phases[j] = ph;
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return phases[x] < phases[y]; });
  UnitaryEig res;
  for (int j = 0; j < 4; ++j) {
    res.phases[j] = phases[order[j]];
    for (int r = 0; r < 4; ++r) res.vectors(r, j) = W(r, order[j]);
  }

  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    const cplx lam = std::polar(1.0, res.phases[j]);
    double rsq = 0.0;
    for (int r = 0; r < 4; ++r) {
      cplx uv(0.0, 0.0);
      for (int c = 0; c < 4; ++c) uv += u(r, c) * res.vectors(c, j);
      rsq += std::norm(uv - lam * res.vectors(r, j));
    }
    worst = std::max(worst, std::sqrt(rsq));
  }
  out = res;
  return worst;
}

}  // namespace detail

// Eigendecomposition of a 4x4 unitary. The fallback mixes shift the primary
// spectrum so that eigenvalues sharing a real part (conjugate phase pairs)
// still separate.
inline UnitaryEig unitary_eig(const Matrix4& u) {
  static constexpr double kMixes[] = {0.0, 0.6180339887498949,
                                      -0.7548776662466927};
  UnitaryEig best{};
  double best_res = 1e300;
  for (double mix : kMixes) {
    UnitaryEig attempt{};
    const double res = detail::unitary_eig_attempt(u, mix, attempt);
    if (res < best_res) {
      best_res = res;
      best = attempt;
    }
    if (best_res <= 1e-9) return best;
  }
  throw numeric_error(
      "unitary eigendecomposition did not converge; worst residual " +
      std::to_string(best_res));
}

// One-sided (Hestenes) Jacobi: rotates the given 16-dim columns in place
// until mutually orthogonal. Returns the per-column Euclidean norms, which
// are the singular values of the matrix those columns form. Zero columns
// stay zero.
inline std::vector<double> hestenes_orthogonalize(
    std::vector<CoeffVector16>& cols) {
  const int m = static_cast<int>(cols.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (int i = 0; i < m - 1; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const double a = coeff_dot(cols[i], cols[i]);
        const double b = coeff_dot(cols[j], cols[j]);
        if (a == 0.0 || b == 0.0) continue;
        const double d = coeff_dot(cols[i], cols[j]);
        if (std::abs(d) <= 1e-15 * std::sqrt(a) * std::sqrt(b)) continue;
        const double tau = (b - a) / (2.0 * d);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int r = 0; r < 16; ++r) {
          const double xi = cols[i][r], xj = cols[j][r];
          cols[i][r] = c * xi - s * xj;
          cols[j][r] = s * xi + c * xj;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  std::vector<double> norms(m);
  for (int i = 0; i < m; ++i) norms[i] = coeff_norm(cols[i]);
  return norms;
}

// All 16 singular values of a real 16x16 matrix, descending.
inline std::array<double, 16> singular_values_16(const Matrix16& m) {
  std::vector<CoeffVector16> cols(m.rows.begin(), m.rows.end());
  std::vector<double> norms = hestenes_orthogonalize(cols);
  std::sort(norms.begin(), norms.end(), std::greater<double>());
  std::array<double, 16> out{};
  for (int i = 0; i < 16; ++i) out[i] = norms[i];
  return out;
}

// Determinant of a real 16x16 matrix by LU elimination with partial
// pivoting; the determinant is the signed product of the pivots.
inline double lu_det_16(const Matrix16& m) {
  std::array<CoeffVector16, 16> a = m.rows;
  double det = 1.0;
  for (int k = 0; k < 16; ++k) {
    int piv = k;
    double best = std::abs(a[k][k]);
    for (int r = k + 1; r < 16; ++r) {
      const double v = std::abs(a[r][k]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    const double inv = 1.0 / a[k][k];
    for (int r = k + 1; r < 16; ++r) {
      const double f = a[r][k] * inv;
      if (f == 0.0) continue;
      for (int c = k; c < 16; ++c) a[r][c] -= f * a[k][c];
    }
  }
  return det;
}

// Largest two singular values of a complex 4x4 matrix, by one-sided
// Jacobi on the columns. Working on the matrix itself rather than its
// Gram matrix keeps tiny singular values accurate to machine precision
// instead of the square root of it.
inline std::array<double, 2> top_two_singular_values(const Matrix4& m) {
  std::array<std::array<cplx, 4>, 4> col;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) col[c][r] = m(r, c);
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        double a = 0.0, b = 0.0;
        cplx d(0.0, 0.0);
        for (int r = 0; r < 4; ++r) {
          a += std::norm(col[i][r]);
          b += std::norm(col[j][r]);
          d += std::conj(col[i][r]) * col[j][r];
        }
        const double md = std::abs(d);
        if (a == 0.0 || b == 0.0 ||
            md <= 1e-15 * std::sqrt(a) * std::sqrt(b))
          continue;
        const cplx e = d / md;
        const double tau = (b - a) / (2.0 * md);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int r = 0; r < 4; ++r) {
          const cplx xi = col[i][r];
          const cplx xj = col[j][r] * std::conj(e);
          col[i][r] = c * xi - s * xj;
          col[j][r] = s * xi + c * xj;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  std::array<double, 4> sig{};
  for (int c = 0; c < 4; ++c) {
    double n2 = 0.0;
    for (int r = 0; r < 4; ++r) n2 += std::norm(col[c][r]);
    sig[c] = std::sqrt(n2);
  }
  std::sort(sig.begin(), sig.end(), std::greater<double>());
  return {sig[0], sig[1]};
}

// Inverse of a complex 4x4 matrix by Gauss-Jordan elimination with partial
// pivoting.
inline Matrix4 inverse4(const Matrix4& m) {
  Matrix4 a = m;
  Matrix4 inv = Matrix4::identity();
  for (int k = 0; k < 4; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int r = k + 1; r < 4; ++r) {
      const double v = std::abs(a(r, k));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) throw numeric_error("matrix inverse: singular input");
    if (piv != k) {
      for (int c = 0; c < 4; ++c) {
        std::swap(a(piv, c), a(k, c));
        std::swap(inv(piv, c), inv(k, c));
      }
    }
    const cplx d = a(k, k);
    for (int c = 0; c < 4; ++c) {
      a(k, c) /= d;
      inv(k, c) /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == k) continue;
      const cplx f = a(r, k);
      if (f == cplx(0.0, 0.0)) continue;
      for (int c = 0; c < 4; ++c) {
        a(r, c) -= f * a(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

}  // namespace gatelab
