// Walkthrough: best-word synthesis over the two-letter alphabet
// {U, V = TUT} where T swaps the qubits, plus the mean-distance decay as
// the allowed word length grows.

#include <cstdio>

#include "gatelab/gatelab.hpp"

using namespace gatelab;

int main() {
  const Unitary4 gate = gate_barenco(0.3, 0.4, 0.5);
  std::printf("word synthesis walkthrough, repertoire gate barenco(0.3, 0.4, 0.5)\n\n");

  std::printf("exact hits:\n");
  const SynthesisResult self = synthesize(gate, gate, 4);
  std::printf("  target = the gate itself   -> word %-8s distance %.3e\n",
              self.best_word.letters.c_str(), self.achieved_distance);
  const Matrix4& t = twist().m();
  const SynthesisResult twisted =
      synthesize(Unitary4(t * gate.m() * t), gate, 4);
  std::printf("  target = its twist TUT     -> word %-8s distance %.3e\n\n",
              twisted.best_word.letters.c_str(), twisted.achieved_distance);

  std::printf("Haar targets, growing depth:\n");
  std::printf("  %-24s %6s %6s %6s\n", "target stream", "d=4", "d=8", "d=12");
  for (int i = 0; i < 3; ++i) {
    RngStream s(7, static_cast<std::uint64_t>(i));
    const Unitary4 target = haar_random_unitary(s);
    double d[3];
    int k = 0;
    for (int depth : {4, 8, 12})
      d[k++] = synthesize(target, gate, depth).achieved_distance;
    std::printf("  (7, %d)%18s %.4f %.4f %.4f\n", i, "", d[0], d[1], d[2]);
  }

  std::printf("\nmean distance to 6 seeded targets on the depth grid:\n");
  const DecayResult decay = decay_experiment(gate, 6, 12, 11);
  for (std::size_t i = 0; i < decay.depths.size(); ++i)
    std::printf("  depth %2d: mean %.4f\n", decay.depths[i],
                decay.mean_distance[i]);
  std::printf("  log-mean slope per unit depth: %.5f\n", decay.slope);
  std::printf(
      "\nDistances drift down slowly: two letters generate a thin reachable\n"
      "set at these depths, so the drop is steady but far from dramatic.\n");
  return 0;
}
