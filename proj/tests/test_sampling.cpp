#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gatelab/gatelab.hpp"
#include "helpers.hpp"

using namespace gatelab;

TEST_CASE("Haar sampler basics") {
  SECTION("draws are unitary and finite") {
    for (int i = 0; i < 500; ++i) {
      const Unitary4 u = testgen::haar(501, i);
      CHECK(unitarity_violation(u.m()) <= 1e-10);
      CHECK(u.m().is_finite());
    }
  }

  SECTION("same stream, same gate, bit for bit") {
    for (int i = 0; i < 500; ++i) {
      RngStream a(502, i), b(502, i);
      const Unitary4 ua = haar_random_unitary(a);
      const Unitary4 ub = haar_random_unitary(b);
      CHECK(max_abs_diff(ua.m(), ub.m()) == 0.0);
    }
  }

  SECTION("trace second moment sits near one") {
    // E |tr u|^2 = 1 exactly under the invariant measure; the sample mean
    // over 10000 draws has standard error well under the window below.
    double acc = 0.0;
    for (int i = 0; i < 10000; ++i) {
      RngStream s(5, i);
      acc += std::norm(haar_random_unitary(s).m().trace());
    }
    const double mean = acc / 10000.0;
    CHECK(mean > 0.9);
    CHECK(mean < 1.1);
  }

  SECTION("left translation invariance by two-sample KS") {
    // distance(u, 1) for 5000 draws against the same statistic for v*u
    // with a fixed v. Deterministic streams, so the statistic is a frozen
    // number around 0.018; the 0.05 bound leaves wide margin.
    RngStream fixed(99, 0);
    const Unitary4 v = haar_random_unitary(fixed);
    const Unitary4 eye{Matrix4::identity()};
    std::vector<double> a, b;
    a.reserve(5000);
    b.reserve(5000);
    for (int i = 0; i < 5000; ++i) {
      RngStream s1(7, i), s2(1007, i);
      a.push_back(distance(haar_random_unitary(s1), eye));
      b.push_back(distance(Unitary4(v.m() * haar_random_unitary(s2).m()), eye));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double ks = 0.0;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
      if (a[ia] <= b[ib])
        ++ia;
      else
        ++ib;
      ks = std::max(ks, std::abs(static_cast<double>(ia) / a.size() -
                                 static_cast<double>(ib) / b.size()));
    }
    CHECK(ks < 0.05);
  }
}

TEST_CASE("ratio histogram buckets") {
  CHECK(sv_ratio_bucket(0.0) == 0);
  CHECK(sv_ratio_bucket(1e-12) == 0);
  CHECK(sv_ratio_bucket(2.2e-19) == 0);
  CHECK(sv_ratio_bucket(3.2e-10) == 4);
  CHECK(sv_ratio_bucket(1e-7) == 8);
  CHECK(sv_ratio_bucket(3.8e-6) == 10);
  CHECK(sv_ratio_bucket(0.999999) == 19);
  CHECK(sv_ratio_bucket(1.0) == 19);
  CHECK(sv_ratio_bucket(42.0) == 19);

  SECTION("all ratios land in range") {
    for (int i = 0; i < 500; ++i) {
      RngStream s(503, i);
      const double r = std::pow(10.0, -14.0 * s.uniform01());
      const int b = sv_ratio_bucket(r);
      CHECK(b >= 0);
      CHECK(b <= 19);
    }
  }
}

TEST_CASE("survey") {
  SECTION("input validation") {
    CHECK_THROWS_AS(survey(0, 1), validation_error);
  }

  SECTION("deterministic across calls") {
    const SurveyResult a = survey(50, 9);
    const SurveyResult b = survey(50, 9);
    CHECK(a.n_samples == b.n_samples);
    CHECK(a.n_universal_by_scheme == b.n_universal_by_scheme);
    CHECK(a.seed == b.seed);
    for (int i = 0; i < 20; ++i)
      CHECK(a.sv_ratio_histogram[i] == b.sv_ratio_histogram[i]);
  }

  SECTION("frozen composition of the first 200 seed-42 samples") {
    // Scheme certificates fire at indices 41, 73, 184, 196 in this stream;
    // every other sample certifies through its closure.
    const SurveyDetail d = survey_detailed(200, 42);
    CHECK(d.base.n_samples == 200);
    CHECK(d.base.n_universal_by_scheme == 4);
    CHECK(d.verdict_counts[static_cast<int>(Verdict::UniversalByScheme)] == 4);
    CHECK(d.verdict_counts[static_cast<int>(Verdict::UniversalByClosure)] == 196);
    CHECK(d.verdict_counts[static_cast<int>(Verdict::Inconclusive)] == 0);

    int total = 0;
    for (int i = 0; i < 20; ++i) total += d.base.sv_ratio_histogram[i];
    CHECK(total == 200);
    CHECK(d.min_sv_ratio <= d.max_sv_ratio);
    CHECK(d.max_sv_ratio > 1e-7);  // the four scheme hits
  }
}

TEST_CASE("neighborhood measurement") {
  const Hermitian4 h1a = log_unitary(gate_barenco(0.3, 0.4, 0.5));

  SECTION("input validation") {
    CHECK_THROWS_AS(measure_neighborhood(h1a, -1.0, 10, 1), validation_error);
    CHECK_THROWS_AS(measure_neighborhood(h1a, 0.1, 0, 1), validation_error);
  }

  SECTION("perturbed three-parameter generators all certify universal") {
    // The rank-9 obstruction is a measure-zero property of the exact
    // family; any generic displacement restores the full 16-dimensional
    // closure.
    CHECK(measure_neighborhood(h1a, 1e-3, 200, 42) == 1.0);
  }

  SECTION("zero radius reproduces the center gate") {
    // All perturbations equal the gate itself, which is honestly
    // inconclusive, so the universal fraction at radius zero is zero.
    CHECK(measure_neighborhood(h1a, 0.0, 10, 42) == 0.0);
  }

  SECTION("determinism") {
    const double a = measure_neighborhood(h1a, 1e-3, 25, 11);
    const double b = measure_neighborhood(h1a, 1e-3, 25, 11);
    CHECK(a == b);
  }
}

TEST_CASE("neighborhood probe") {
  SECTION("requires a scheme-certified center") {
    CHECK_THROWS_AS(neighborhood_probe(gate_barenco(0.3, 0.4, 0.5), 1e-3, 10, 1),
                    precondition_error);
    CHECK_THROWS_AS(neighborhood_probe(gate_cnot(), 1e-3, 10, 1),
                    precondition_error);
  }

  SECTION("certified center at radius zero scores one") {
    const Unitary4 u = testgen::haar(testgen::kSchemeWitnessSeed, 41);
    CHECK(neighborhood_probe(u, 0.0, 10, 5) == 1.0);
    CHECK(neighborhood_probe(u, 1e-3, 50, 5) == 1.0);
  }
}
