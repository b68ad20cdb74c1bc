// Walkthrough: the 16-generator commutator scheme on three inputs --
// the three-parameter reference gate (rank stalls at 9), its simpler
// variant (rank 8), and a Haar-random gate whose scheme reaches full rank.

#include <cstdio>

#include "gatelab/gatelab.hpp"

using namespace gatelab;

namespace {

void spectrum_row(const char* label, const GeneratorScheme& s) {
  std::printf("%s\n", label);
  std::printf("  rank %d (borderline %d), sigma16/sigma1 %.3e, det %.6e\n",
              s.rank, s.borderline_count, s.sv_ratio, s.determinant);
  std::printf("  singular values:");
  for (int i = 0; i < 16; ++i) {
    if (i % 8 == 0) std::printf("\n   ");
    std::printf(" %.3e", s.singular_values[i]);
  }
  std::printf("\n\n");
}

}  // namespace

int main() {
  std::printf("commutator-scheme rank walkthrough\n\n");

  const Hermitian4 h1 = log_unitary(gate_barenco(0.3, 0.4, 0.5));
  spectrum_row("three-parameter gate barenco(0.3, 0.4, 0.5), full scheme:",
               build_scheme(h1));
  spectrum_row("same gate, simpler scheme (no cross terms):",
               build_simple_scheme(h1));

  RngStream stream(42, 41);
  const Unitary4 g = haar_random_unitary(stream);
  spectrum_row("Haar-random gate from stream (42, 41), full scheme:",
               build_scheme(log_unitary(g)));

  std::printf(
      "The reference gate's generator vanishes on the first basis state.\n"
      "Twist conjugation and commutators preserve that, so all 16 scheme\n"
      "members live in the 9-dimensional algebra of Hermitians annihilating\n"
      "one fixed vector: seven singular values are exactly zero. A generic\n"
      "gate has no fixed basis state and the same recipe reaches rank 16,\n"
      "which certifies universality on its own.\n");
  return 0;
}
