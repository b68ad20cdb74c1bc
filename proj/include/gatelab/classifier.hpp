#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gatelab/core.hpp"
#include "gatelab/eigen.hpp"
#include "gatelab/linalg.hpp"
#include "gatelab/scheme.hpp"

namespace gatelab {

// Universality verdicts: the scheme certificate, the Lie closure fallback,
// and detection of the conjectured non-universal families (computation-basis
// gates and one-qubit products).

// True iff every column of u has exactly one entry of modulus > 1e-10, so u
// maps computation-basis states to computation-basis states (up to phase)
// and never creates superpositions.
inline bool detect_classical(const Unitary4& u) {
  for (int c = 0; c < 4; ++c) {
    int big = 0;
    for (int r = 0; r < 4; ++r)
      if (std::abs(u.m()(r, c)) > 1e-10) ++big;
    if (big != 1) return false;
  }
  return true;
}

// Stricter diagnostic: a permutation matrix with unit entries, no phases.
inline bool detect_strict_permutation(const Unitary4& u) {
  if (!detect_classical(u)) return false;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) {
      const cplx z = u.m()(r, c);
      if (std::abs(z) > 1e-10 && std::abs(z - cplx(1.0, 0.0)) > 1e-10)
        return false;
    }
  return true;
}

// True iff u = a x b up to global phase. Decided by the operator-Schmidt
// rank: realign u into M with M[(j,k),(l,m)] = u[(j,l),(k,m)] and test
// whether the second singular value is <= 1e-9 times the first.
inline bool detect_local(const Unitary4& u) {
  Matrix4 m;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int mm = 0; mm < 2; ++mm)
          m(2 * j + k, 2 * l + mm) = u.m()(2 * j + l, 2 * k + mm);
  const std::array<double, 2> sv = top_two_singular_values(m);
  return sv[1] <= 1e-9 * sv[0];
}

struct RationalApprox {
  long long p = 0;
  long long q = 1;
  bool rational = false;
  double error = 0.0;
};

// Best rational approximation p/q to x with q <= q_max, from continued
// fraction convergents and the final run of semiconvergents. The rational
// flag reports |x - p/q| <= tol.
inline RationalApprox best_rational(double x, long long q_max = 1000,
                                    double tol = 1e-9) {
  const double sign = x < 0.0 ? -1.0 : 1.0;
  double y = std::abs(x);
  long long p_prev = 1, q_prev = 0;  // convergent k-1
  long long p_cur = static_cast<long long>(std::floor(y));
  long long q_cur = 1;
  double frac = y - std::floor(y);

  RationalApprox best;
  best.p = p_cur;
  best.q = 1;
  best.error = std::abs(y - static_cast<double>(p_cur));

  auto consider = [&](long long p, long long q) {
    if (q < 1 || q > q_max) return;
    const double err = std::abs(y - static_cast<double>(p) / static_cast<double>(q));
    if (err < best.error) {
      best.error = err;
      best.p = p;
      best.q = q;
    }
  };

  for (int it = 0; it < 64; ++it) {
    if (frac < 1e-15) break;
    const double inv = 1.0 / frac;
    const double af = std::floor(inv);
    if (af > 4e18) break;
    const long long a = static_cast<long long>(af);
    frac = inv - af;

    const long long p_next = a * p_cur + p_prev;
    const long long q_next = a * q_cur + q_prev;
    if (q_next > q_max) {
      // Semiconvergents p_prev + t p_cur over q_prev + t q_cur fill the gap
      // between the last admissible convergent and the bound.
      const long long t = (q_max - q_prev) / q_cur;
      if (t >= 1) consider(p_prev + t * p_cur, q_prev + t * q_cur);
      break;
    }
    consider(p_next, q_next);
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }

  best.rational = best.error <= tol;
  best.p = static_cast<long long>(sign) * best.p;
  return best;
}

struct PairRatioApprox {
  int i = 0;
  int j = 0;
  RationalApprox ratio;  // phases[i]/phases[j]
};

struct EigenphaseAnalysis {
  std::array<double, 4> phases{};  // ascending, in (-pi, pi]
  std::array<bool, 4> rational_flags{};
  std::array<RationalApprox, 4> approximations{};  // of phases[j]/pi
  std::vector<PairRatioApprox> pairwise;           // nonzero-phase pairs
};

// Eigenphases of u with rationality diagnostics: each phase over pi, and
// each ratio of nonzero phases, searched for rational approximations with
// denominator at most 1000 at tolerance 1e-9.
inline EigenphaseAnalysis eigenphase_analysis(const Unitary4& u) {
  EigenphaseAnalysis out;
  const UnitaryEig e = unitary_eig(u.m());
  out.phases = e.phases;
  for (int j = 0; j < 4; ++j) {
    out.approximations[j] = best_rational(out.phases[j] / kPi);
    out.rational_flags[j] = out.approximations[j].rational;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(out.phases[i]) <= 1e-12 || std::abs(out.phases[j]) <= 1e-12)
        continue;
      PairRatioApprox pr;
      pr.i = i;
      pr.j = j;
      pr.ratio = best_rational(out.phases[i] / out.phases[j]);
      out.pairwise.push_back(pr);
    }
  return out;
}

struct LieClosure {
  int dimension = 0;
  std::vector<CoeffVector16> basis;  // orthonormal coefficient vectors
};

namespace detail {

// Orthonormal basis of the span of the given coefficient vectors, filtered
// at 1e-7 relative singular value.
inline std::vector<CoeffVector16> orthonormal_span(
    std::vector<CoeffVector16> cols) {
  const std::vector<double> norms = hestenes_orthogonalize(cols);
  double top = 0.0;
  for (double n : norms) top = std::max(top, n);
  std::vector<CoeffVector16> basis;
  if (top == 0.0) return basis;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (norms[i] > 1e-7 * top) {
      CoeffVector16 v = cols[i];
      for (double& x : v) x /= norms[i];
      basis.push_back(v);
    }
  }
  return basis;
}

}  // namespace detail

// Smallest commutator-closed subspace containing the seeds, computed in
// coefficient space. Each round commutes all pairs of current basis
// elements, projects out the existing span twice, and keeps residual
// directions above 1e-7 relative to the commutator norm. Commutators whose
// own norm is below 1e-7 are discarded outright: the basis is orthonormal,
// so anything smaller is cancellation noise rather than a direction.
inline LieClosure lie_closure(const std::vector<Hermitian4>& seeds) {
  if (seeds.empty()) throw validation_error("lie_closure: empty seed list");
  std::vector<CoeffVector16> init;
  init.reserve(seeds.size());
  for (const Hermitian4& h : seeds) init.push_back(pauli_coefficients(h));

  LieClosure out;
  out.basis = detail::orthonormal_span(std::move(init));

  bool grew = true;
  while (grew && out.basis.size() < 16) {
    grew = false;
    const std::size_t m = out.basis.size();
    std::vector<Hermitian4> elems;
    elems.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      elems.push_back(reconstruct_hermitian(out.basis[i]));
    for (std::size_t i = 0; i < m && out.basis.size() < 16; ++i) {
      for (std::size_t j = i + 1; j < m && out.basis.size() < 16; ++j) {
        CoeffVector16 v = pauli_coefficients(commutator_i(elems[i], elems[j]));
        const double nv = coeff_norm(v);
        if (nv <= 1e-7) continue;
        for (int pass = 0; pass < 2; ++pass)
          for (const CoeffVector16& b : out.basis) {
            const double d = coeff_dot(v, b);
            for (int r = 0; r < 16; ++r) v[r] -= d * b[r];
          }
        const double res = coeff_norm(v);
        if (res > 1e-7 * nv) {
          for (double& x : v) x /= res;
          out.basis.push_back(v);
          grew = true;
        }
      }
    }
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

// Dimension of the closure basis after removing the identity component
// (coefficient index 0). A 15-dimensional closure whose traceless
// projection is still 15-dimensional is exactly the traceless algebra.
inline int traceless_projection_dimension(const std::vector<CoeffVector16>& basis) {
  if (basis.empty()) return 0;
  std::vector<CoeffVector16> proj = basis;
  for (CoeffVector16& v : proj) v[0] = 0.0;
  const std::vector<double> norms = hestenes_orthogonalize(proj);
  double top = 0.0;
  for (double n : norms) top = std::max(top, n);
  if (top == 0.0) return 0;
  int dim = 0;
  for (double n : norms)
    if (n > 1e-7 * top) ++dim;
  return dim;
}

enum class Verdict {
  UniversalByScheme,
  UniversalByClosure,
  UniversalUpToPhase,
  ConjecturedNonUniversalClassical,
  ConjecturedNonUniversalLocal,
  Inconclusive,
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::UniversalByScheme: return "UniversalByScheme";
    case Verdict::UniversalByClosure: return "UniversalByClosure";
    case Verdict::UniversalUpToPhase: return "UniversalUpToPhase";
    case Verdict::ConjecturedNonUniversalClassical:
      return "ConjecturedNonUniversalClassical";
    case Verdict::ConjecturedNonUniversalLocal:
      return "ConjecturedNonUniversalLocal";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

struct UniversalityReport {
  Verdict verdict = Verdict::Inconclusive;
  int closure_dimension = 0;
  int traceless_dimension = 0;
  int scheme_rank = 0;
  double scheme_sv_ratio = 0.0;
  bool classical = false;
  bool strict_permutation = false;
  bool local = false;
  EigenphaseAnalysis eigenphases;
  std::vector<CoeffVector16> closure_basis;
};

// Verdict pipeline: flag detection, then the 16-generator scheme as the
// primary certificate, then the general Lie closure, then the conjectured
// non-universal families, else Inconclusive. Precedence: scheme > closure >
// flags > Inconclusive.
inline UniversalityReport classify(const Unitary4& u) {
  UniversalityReport rep;
  rep.classical = detect_classical(u);
  rep.strict_permutation = detect_strict_permutation(u);
  rep.local = detect_local(u);
  rep.eigenphases = eigenphase_analysis(u);

  const Hermitian4 h1 = log_unitary(u);
  const Hermitian4 h2 = twist_conjugate(h1);
  const GeneratorScheme scheme = build_scheme(h1);
  rep.scheme_rank = scheme.rank;
  rep.scheme_sv_ratio = scheme.sv_ratio;

  const LieClosure closure = lie_closure({h1, h2});
  rep.closure_dimension = closure.dimension;
  rep.traceless_dimension = traceless_projection_dimension(closure.basis);
  rep.closure_basis = closure.basis;

  if (scheme.rank == 16) {
    rep.verdict = Verdict::UniversalByScheme;
  } else if (closure.dimension == 16) {
    rep.verdict = Verdict::UniversalByClosure;
  } else if (closure.dimension == 15 && rep.traceless_dimension == 15) {
    rep.verdict = Verdict::UniversalUpToPhase;
  } else if (rep.classical || rep.local) {
    // A gate can carry both flags (phased one-qubit permutations). Plain
    // permutations read most naturally as classical; otherwise the local
    // structure is the sharper description.
    if (rep.strict_permutation)
      rep.verdict = Verdict::ConjecturedNonUniversalClassical;
    else if (rep.local)
      rep.verdict = Verdict::ConjecturedNonUniversalLocal;
    else
      rep.verdict = Verdict::ConjecturedNonUniversalClassical;
  } else {
    rep.verdict = Verdict::Inconclusive;
  }
  return rep;
}

}  // namespace gatelab
