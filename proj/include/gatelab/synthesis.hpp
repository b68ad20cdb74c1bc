#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gatelab/core.hpp"
#include "gatelab/linalg.hpp"
#include "gatelab/rng.hpp"
#include "gatelab/sampling.hpp"
#include "gatelab/scheme.hpp"

namespace gatelab {

// Constructive approximation: fractional powers through the eigenphase
// lattice, the two product limits (sum and commutator generators), and
// best-word search over the two-letter alphabet {U, V = TUT}.

namespace detail {

inline Matrix4 matrix_power(Matrix4 base, long long n) {
  Matrix4 acc = Matrix4::identity();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

inline double pair_distance(const Matrix4& a, const Matrix4& b,
                            bool phase_invariant) {
  cplx tr(0.0, 0.0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) tr += std::conj(a(c, r)) * b(c, r);
  const double t = phase_invariant ? std::abs(tr) : tr.real();
  return std::sqrt(std::max(0.0, 1.0 - 0.25 * t));
}

}  // namespace detail

struct PowerApproximation {
  double lambda = 0.0;
  long long best_n = 0;
  double error = 0.0;
  long long n_max = 0;
};

// Exhaustive search for the power n in [0, n_max] whose eigenphases best
// match those of u^lambda. Candidate errors are evaluated in the shared
// eigenbasis, advancing the four phases incrementally modulo 2 pi, so the
// cost per candidate is four cosines and no matrix products.
inline PowerApproximation power_approximation(const Unitary4& u, double lambda,
                                              long long n_max) {
  if (n_max < 1) throw validation_error("power_approximation: n_max must be >= 1");
  const UnitaryEig e = unitary_eig(u.m());
  std::array<double, 4> mu{}, th{};
  for (int j = 0; j < 4; ++j)
    mu[j] = std::remainder(lambda * e.phases[j], 2.0 * kPi);

  long long best_n = 0;
  double best_err2 = 1e300;
  for (long long n = 0; n <= n_max; ++n) {
    double tr = 0.0;
    for (int j = 0; j < 4; ++j) tr += std::cos(th[j] - mu[j]);
    const double err2 = 1.0 - 0.25 * tr;
    if (err2 < best_err2) {
      best_err2 = err2;
      best_n = n;
    }
    for (int j = 0; j < 4; ++j) {
      th[j] += e.phases[j];
      if (th[j] > kPi) th[j] -= 2.0 * kPi;
      if (th[j] < -kPi) th[j] += 2.0 * kPi;
    }
  }

  PowerApproximation out;
  out.lambda = lambda;
  out.best_n = best_n;
  out.n_max = n_max;
  const Hermitian4 h = log_unitary(u);
  const Unitary4 target = exp_hermitian(lambda * h);
  out.error = distance(Unitary4(detail::matrix_power(u.m(), best_n)), target);
  return out;
}

struct TrotterStep {
  Unitary4 approx;
  double error = 0.0;
  TrotterStep() : approx(Matrix4::identity()) {}
};

// (e^{i alpha P/n} e^{i beta Q/n})^n against e^{i(alpha P + beta Q)}.
inline TrotterStep trotter_sum(const Hermitian4& p, const Hermitian4& q,
                               double alpha, double beta, long long n) {
  if (n < 1) throw validation_error("trotter_sum: n must be >= 1");
  const Unitary4 ea = exp_hermitian((alpha / static_cast<double>(n)) * p);
  const Unitary4 eb = exp_hermitian((beta / static_cast<double>(n)) * q);
  TrotterStep out;
  out.approx = Unitary4(detail::matrix_power(ea.m() * eb.m(), n));
  const Unitary4 target = exp_hermitian(alpha * p + beta * q);
  out.error = distance(out.approx, target);
  return out;
}

// (e^{-iP/sqrt n} e^{iQ/sqrt n} e^{iP/sqrt n} e^{-iQ/sqrt n})^n against the
// group commutator limit, which is the exponential of the anti-Hermitian
// [P, Q] and is reached here as exp_hermitian(commutator_i(q, p)).
inline TrotterStep trotter_commutator(const Hermitian4& p, const Hermitian4& q,
                                      long long n) {
  if (n < 1) throw validation_error("trotter_commutator: n must be >= 1");
  const double s = std::sqrt(static_cast<double>(n));
  const Matrix4 step = exp_hermitian((-1.0 / s) * p).m() *
                       exp_hermitian((1.0 / s) * q).m() *
                       exp_hermitian((1.0 / s) * p).m() *
                       exp_hermitian((-1.0 / s) * q).m();
  TrotterStep out;
  out.approx = Unitary4(detail::matrix_power(step, n));
  const Unitary4 target = exp_hermitian(commutator_i(q, p));
  out.error = distance(out.approx, target);
  return out;
}

struct GateWord {
  std::string letters;  // over {U, V}
  Unitary4 realized;
  GateWord() : realized(Matrix4::identity()) {}
};

struct SynthesisResult {
  Unitary4 target;
  GateWord best_word;
  double achieved_distance = 0.0;
  int depth = 0;
  SynthesisResult() : target(Matrix4::identity()) {}
};

// Word search over products of U and V = TUT up to a fixed depth, shared
// across targets. All words of length at most ceil(depth/2) are
// enumerated once and indexed by a quantized key on the real parts of
// their first two rows (grid width 0.05). A query walks every suffix word,
// forms target times the suffix inverse, and probes the index over all
// adjacent cells, so a full-depth word is found whenever its prefix lands
// within one cell of the probe. Every prefix word is also scored directly,
// which exactly covers all words up to half depth. Quantization can miss a
// deeper word whose prefix falls farther than one cell away; the search is
// a deterministic experiment, not a certified optimum.
class WordSearch {
 public:
  WordSearch(const Unitary4& gate, int depth, bool phase_invariant = false)
      : depth_(depth), phase_invariant_(phase_invariant) {
    if (depth < 0) throw validation_error("synthesize: depth must be >= 0");
    if (depth > 30) throw resource_error("synthesize: depth exceeds guard 30");
    u_ = gate.m();
    const Matrix4& t = twist().m();
    v_ = t * u_ * t;
    half_ = (depth + 1) / 2;
    suffix_len_ = depth - half_;

    std::size_t count = 1;
    for (int l = 1; l <= half_; ++l) count += (std::size_t{1} << l);
    nodes_.reserve(count);
    next_.reserve(count);
    nodes_.push_back(Node{Matrix4::identity(), -1, ' ', 0});
    std::size_t level_begin = 0, level_end = 1;
    for (int l = 1; l <= half_; ++l) {
      for (std::size_t i = level_begin; i < level_end; ++i)
        for (int letter = 0; letter < 2; ++letter)
          nodes_.push_back(Node{nodes_[i].prod * (letter == 0 ? u_ : v_),
                                static_cast<int>(i), letter == 0 ? 'U' : 'V',
                                l});
      level_begin = level_end;
      level_end = nodes_.size();
    }

    next_.assign(nodes_.size(), -1);
    head_.reserve(nodes_.size() * 2);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const std::uint64_t key = quantize_key(nodes_[i].prod);
      auto it = head_.find(key);
      if (it == head_.end()) {
        head_.emplace(key, static_cast<int>(i));
        tail_.emplace(key, static_cast<int>(i));
      } else {
        int& tl = tail_[key];
        next_[tl] = static_cast<int>(i);
        tl = static_cast<int>(i);
      }
    }
  }

  SynthesisResult best_for(const Unitary4& target) const {
    int best_prefix = 0, best_suffix = -1;
    double best = 1e300;
    auto offer = [&](double d, int p, int s) {
      if (d < best) {
        best = d;
        best_prefix = p;
        best_suffix = s;
      }
    };

    for (std::size_t i = 0; i < nodes_.size(); ++i)
      offer(detail::pair_distance(nodes_[i].prod, target.m(), phase_invariant_),
            static_cast<int>(i), -1);

    std::array<std::uint8_t, 8> cell{};
    for (std::size_t s = 0; s < nodes_.size(); ++s) {
      if (nodes_[s].len > suffix_len_) break;  // nodes are in length order
      const Matrix4 r = target.m() * nodes_[s].prod.adjoint();
      for (int i = 0; i < 8; ++i)
        cell[i] = static_cast<std::uint8_t>(
            std::lround(r.a[i].real() / 0.05) + 32);
      std::array<int, 8> trit{};  // -1, 0, +1 offsets as 0, 1, 2
      for (;;) {
        std::uint64_t key = 0;
        for (int i = 0; i < 8; ++i)
          key |= static_cast<std::uint64_t>(
                     static_cast<std::uint8_t>(cell[i] + trit[i] - 1))
                 << (8 * i);
        const auto it = head_.find(key);
        if (it != head_.end()) {
          for (int p = it->second; p != -1; p = next_[p])
            offer(detail::pair_distance(nodes_[p].prod * nodes_[s].prod,
                                        target.m(), phase_invariant_),
                  p, static_cast<int>(s));
        }
        int d = 0;
        while (d < 8 && trit[d] == 2) trit[d++] = 0;
        if (d == 8) break;
        ++trit[d];
      }
    }

    SynthesisResult out;
    out.target = target;
    out.depth = depth_;
    std::string letters = word_of(best_prefix);
    Matrix4 prod = nodes_[best_prefix].prod;
    if (best_suffix >= 0) {
      letters += word_of(best_suffix);
      prod = prod * nodes_[best_suffix].prod;
    }
    out.best_word.letters = letters;
    out.best_word.realized = Unitary4(prod);
    out.achieved_distance =
        detail::pair_distance(prod, target.m(), phase_invariant_);
    return out;
  }

 private:
  struct Node {
    Matrix4 prod;
    int parent;
    char letter;
    int len;
  };

  static std::uint64_t quantize_key(const Matrix4& m) {
    std::uint64_t key = 0;
    for (int i = 0; i < 8; ++i)
      key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(
                 std::lround(m.a[i].real() / 0.05) + 32))
             << (8 * i);
    return key;
  }

  std::string word_of(int node) const {
    std::string s;
    for (int i = node; i > 0; i = nodes_[i].parent) s.push_back(nodes_[i].letter);
    std::reverse(s.begin(), s.end());
    return s;
  }

  int depth_, half_ = 0, suffix_len_ = 0;
  bool phase_invariant_;
  Matrix4 u_, v_;
  std::vector<Node> nodes_;
  std::vector<int> next_;
  std::unordered_map<std::uint64_t, int> head_;
  std::unordered_map<std::uint64_t, int> tail_;
};

inline SynthesisResult synthesize(const Unitary4& target, const Unitary4& gate,
                                  int depth, bool phase_invariant = false) {
  return WordSearch(gate, depth, phase_invariant).best_for(target);
}

struct DecayResult {
  std::vector<int> depths;
  std::vector<double> mean_distance;
  double slope = 0.0;  // least squares, log mean distance per unit depth
};

// Mean best-word distance to seeded Haar targets on the depth grid
// {4, 8, 12, ...} up to depth_max. Target i is drawn from stream
// (seed, i), identically across depths.
inline DecayResult decay_experiment(const Unitary4& gate, int n_targets,
                                    int depth_max, std::uint64_t seed,
                                    bool phase_invariant = false) {
  if (depth_max > 30) throw resource_error("decay_experiment: depth_max exceeds guard 30");
  if (n_targets < 0) throw validation_error("decay_experiment: n_targets must be >= 0");
  DecayResult out;
  if (n_targets == 0) return out;

  std::vector<Unitary4> targets;
  targets.reserve(static_cast<std::size_t>(n_targets));
  for (int i = 0; i < n_targets; ++i) {
    RngStream stream(seed, static_cast<std::uint64_t>(i));
    targets.push_back(haar_random_unitary(stream));
  }

  for (int depth = 4; depth <= depth_max; depth += 4) {
    const WordSearch search(gate, depth, phase_invariant);
    double sum = 0.0;
    for (const Unitary4& t : targets) sum += search.best_for(t).achieved_distance;
    out.depths.push_back(depth);
    out.mean_distance.push_back(sum / n_targets);
  }

  const std::size_t m = out.depths.size();
  if (m >= 2) {
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      sx += out.depths[i];
      sy += std::log(std::max(out.mean_distance[i], 1e-300));
    }
    const double mx = sx / m, my = sy / m;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double dx = out.depths[i] - mx;
      num += dx * (std::log(std::max(out.mean_distance[i], 1e-300)) - my);
      den += dx * dx;
    }
    out.slope = den > 0.0 ? num / den : 0.0;
  }
  return out;
}

}  // namespace gatelab
