#pragma once

// Small generators shared by the test binaries. Every draw is routed
// through a named (seed, index) stream so failures replay exactly.

#include "gatelab/gatelab.hpp"

namespace testgen {

inline gatelab::Unitary4 haar(std::uint64_t seed, std::uint64_t index) {
  gatelab::RngStream s(seed, index);
  return gatelab::haar_random_unitary(s);
}

// Gaussian coefficient vector in the Hermitian basis.
inline gatelab::Hermitian4 random_hermitian(gatelab::RngStream& s) {
  gatelab::CoeffVector16 c{};
  for (int i = 0; i < 16; ++i) c[i] = s.normal();
  return gatelab::reconstruct_hermitian(c);
}

inline gatelab::Hermitian4 random_hermitian(std::uint64_t seed,
                                            std::uint64_t index) {
  gatelab::RngStream s(seed, index);
  return random_hermitian(s);
}

// Unit Frobenius norm; spectrum then fits inside (-pi, pi), which keeps
// log(exp(h)) an identity on these inputs.
inline gatelab::Hermitian4 random_unit_hermitian(gatelab::RngStream& s) {
  gatelab::CoeffVector16 c{};
  for (int i = 0; i < 16; ++i) c[i] = s.normal();
  const double n = gatelab::coeff_norm(c);
  for (int i = 0; i < 16; ++i) c[i] /= n;
  return gatelab::reconstruct_hermitian(c);
}

inline gatelab::Hermitian4 random_unit_hermitian(std::uint64_t seed,
                                                 std::uint64_t index) {
  gatelab::RngStream s(seed, index);
  return random_unit_hermitian(s);
}

// Indices i for which classify(haar(42, i)) lands UniversalByScheme in the
// first thousand samples. These are the gates whose generator scheme has a
// meaningful (rank 16) determinant; determinant-based regressions run on
// them because generic gates yield rank-deficient schemes whose determinant
// is rounding noise.
inline const int kSchemeWitnessSeed = 42;
inline constexpr int kSchemeWitnessIdx[11] = {41,  73,  184, 196, 412, 556,
                                              593, 749, 764, 888, 898};

}  // namespace testgen
