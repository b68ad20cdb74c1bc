#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gatelab/classifier.hpp"
#include "gatelab/core.hpp"
#include "gatelab/linalg.hpp"
#include "gatelab/rng.hpp"

namespace gatelab {

// Haar sampling and the population experiments: the survey over random
// gates and the perturbation probe around a universal generator.

// Haar-distributed 4x4 unitary: a complex Gaussian matrix orthonormalized
// column by column. Modified Gram-Schmidt leaves each triangular diagonal
// entry equal to a column norm, already real positive, so no phase fix is
// needed. Draw order is row-major, real before imaginary part.
inline Unitary4 haar_random_unitary(RngStream& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix4 q;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) q(r, c) = rng.normal_complex();
    bool degenerate = false;
    for (int c = 0; c < 4 && !degenerate; ++c) {
      for (int k = 0; k < c; ++k) {
        cplx d(0.0, 0.0);
        for (int r = 0; r < 4; ++r) d += std::conj(q(r, k)) * q(r, c);
        for (int r = 0; r < 4; ++r) q(r, c) -= d * q(r, k);
      }
      double nrm = 0.0;
      for (int r = 0; r < 4; ++r) nrm += std::norm(q(r, c));
      nrm = std::sqrt(nrm);
      if (nrm < 1e-8) {
        degenerate = true;
        break;
      }
      for (int r = 0; r < 4; ++r) q(r, c) /= nrm;
    }
    if (!degenerate) return Unitary4(q);
  }
  throw numeric_error("haar_random_unitary: repeated degenerate draws");
}

// Histogram bucket for a singular value ratio, 20 log-spaced buckets over
// [1e-12, 1]. Ratios at or below 1e-12 land in bucket 0, ratios at or
// above 1 in bucket 19.
inline int sv_ratio_bucket(double r) {
  if (r <= 1e-12) return 0;
  if (r >= 1.0) return 19;
  const int b = static_cast<int>(std::floor((std::log10(r) + 12.0) / 12.0 * 20.0));
  return b < 0 ? 0 : (b > 19 ? 19 : b);
}

struct SurveyResult {
  int n_samples = 0;
  int n_universal_by_scheme = 0;
  std::array<int, 20> sv_ratio_histogram{};
  std::uint64_t seed = 0;
};

// Survey internals beyond the pinned result fields: the tally per verdict
// and the extreme scheme ratios seen.
struct SurveyDetail {
  SurveyResult base;
  std::array<int, 6> verdict_counts{};  // indexed by Verdict order
  double min_sv_ratio = 0.0;
  double max_sv_ratio = 0.0;
};

// Classify n Haar gates drawn from per-sample substreams of the seed.
// Sample i uses stream (seed, i), so results are independent of evaluation
// order.
inline SurveyDetail survey_detailed(int n, std::uint64_t seed) {
  if (n < 1) throw validation_error("survey: n must be >= 1");
  SurveyDetail out;
  out.base.n_samples = n;
  out.base.seed = seed;
  out.min_sv_ratio = 1e300;
  out.max_sv_ratio = -1e300;
  for (int i = 0; i < n; ++i) {
    RngStream stream(seed, static_cast<std::uint64_t>(i));
    const Unitary4 u = haar_random_unitary(stream);
    const UniversalityReport rep = classify(u);
    if (rep.verdict == Verdict::UniversalByScheme)
      ++out.base.n_universal_by_scheme;
    ++out.verdict_counts[static_cast<int>(rep.verdict)];
    ++out.base.sv_ratio_histogram[sv_ratio_bucket(rep.scheme_sv_ratio)];
    out.min_sv_ratio = std::min(out.min_sv_ratio, rep.scheme_sv_ratio);
    out.max_sv_ratio = std::max(out.max_sv_ratio, rep.scheme_sv_ratio);
  }
  return out;
}

inline SurveyResult survey(int n, std::uint64_t seed) {
  return survey_detailed(n, seed).base;
}

// Fraction of perturbed generators h1 + delta that classify as universal,
// over n directions drawn uniformly on the coefficient-space unit sphere
// and scaled to the given radius.
inline double measure_neighborhood(const Hermitian4& h1, double radius, int n,
                                   std::uint64_t seed) {
  if (radius < 0.0) throw validation_error("neighborhood: radius must be >= 0");
  if (n < 1) throw validation_error("neighborhood: n must be >= 1");
  int universal = 0;
  for (int i = 0; i < n; ++i) {
    RngStream stream(seed, static_cast<std::uint64_t>(i));
    CoeffVector16 dir{};
    double nrm = 0.0;
    do {
      for (int k = 0; k < 16; ++k) dir[k] = stream.normal();
      nrm = coeff_norm(dir);
    } while (nrm < 1e-12);
    for (int k = 0; k < 16; ++k) dir[k] *= radius / nrm;
    const Hermitian4 delta = reconstruct_hermitian(dir);
    Matrix4 m;
    for (int k = 0; k < 16; ++k) m.a[k] = h1.m().a[k] + delta.m().a[k];
    const UniversalityReport rep = classify(exp_hermitian(Hermitian4(m)));
    if (rep.verdict == Verdict::UniversalByScheme ||
        rep.verdict == Verdict::UniversalByClosure ||
        rep.verdict == Verdict::UniversalUpToPhase)
      ++universal;
  }
  return static_cast<double>(universal) / static_cast<double>(n);
}

// Perturbation probe around a gate already certified UniversalByScheme.
// The generator of the gate is displaced as in measure_neighborhood.
inline double neighborhood_probe(const Unitary4& u, double radius, int n,
                                 std::uint64_t seed) {
  const UniversalityReport rep = classify(u);
  if (rep.verdict != Verdict::UniversalByScheme)
    throw precondition_error(
        "neighborhood_probe: gate is not UniversalByScheme (verdict " +
        std::string(verdict_name(rep.verdict)) + ")");
  return measure_neighborhood(log_unitary(u), radius, n, seed);
}

}  // namespace gatelab
