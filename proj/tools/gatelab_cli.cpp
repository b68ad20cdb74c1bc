// Command-line front end: gate classification, word synthesis, Haar
// surveys, neighborhood probes, Trotter demos, and the built-in claim
// suite. Exit codes for `check`: 0 universal, 2 conjectured non-universal,
// 3 inconclusive, 1 input errors. `verify-paper` exits 0 iff every claim
// that ran passed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gatelab/gatelab.hpp"

namespace {

using nlohmann::json;
using namespace gatelab;

struct GateInput {
  std::string inline_text;
  std::string file_path;
};

void add_gate_options(CLI::App* cmd, GateInput& in, const std::string& what) {
  cmd->add_option("--" + what, in.inline_text,
                  "inline gate text (named form or matrix literal)");
  cmd->add_option("--" + what + "-file", in.file_path,
                  "path to a file holding the gate text");
}

ParsedGate load_gate(const GateInput& in, const std::string& what) {
  if (in.inline_text.empty() == in.file_path.empty())
    throw validation_error("provide exactly one of --" + what + " and --" +
                           what + "-file");
  std::string text = in.inline_text;
  if (!in.file_path.empty()) {
    std::ifstream f(in.file_path);
    if (!f) throw validation_error("cannot open gate file: " + in.file_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  ParsedGate g = parse_gate(text);
  if (g.projected)
    std::cerr << "warning: input gate had unitarity defect " << g.violation
              << "; projected onto the nearest unitary\n";
  return g;
}

bool is_universal(Verdict v) {
  return v == Verdict::UniversalByScheme || v == Verdict::UniversalByClosure ||
         v == Verdict::UniversalUpToPhase;
}

json rational_json(const RationalApprox& r) {
  return json{{"p", r.p}, {"q", r.q}, {"rational", r.rational}, {"error", r.error}};
}

std::ostream& out_for(bool json_mode) {
  return json_mode ? std::cerr : std::cout;
}

Hermitian4 unit_norm_hermitian(RngStream& stream) {
  CoeffVector16 c{};
  double nrm = 0.0;
  do {
    for (int k = 0; k < 16; ++k) c[k] = stream.normal();
    nrm = coeff_norm(c);
  } while (nrm < 1e-12);
  for (int k = 0; k < 16; ++k) c[k] /= nrm;
  return reconstruct_hermitian(c);
}

int run_check(const GateInput& in, bool json_mode) {
  const ParsedGate g = load_gate(in, "gate");
  const UniversalityReport rep = classify(g.u);

  if (json_mode) {
    json doc;
    doc["command"] = "check";
    doc["verdict"] = verdict_name(rep.verdict);
    doc["closure_dimension"] = rep.closure_dimension;
    doc["traceless_dimension"] = rep.traceless_dimension;
    doc["scheme_rank"] = rep.scheme_rank;
    doc["scheme_sv_ratio"] = rep.scheme_sv_ratio;
    doc["classical"] = rep.classical;
    doc["strict_permutation"] = rep.strict_permutation;
    doc["local"] = rep.local;
    json phases = json::array();
    for (int j = 0; j < 4; ++j)
      phases.push_back(json{{"phase", rep.eigenphases.phases[j]},
                            {"over_pi", rational_json(rep.eigenphases.approximations[j])}});
    doc["eigenphases"] = phases;
    json pairs = json::array();
    for (const PairRatioApprox& pr : rep.eigenphases.pairwise)
      pairs.push_back(json{{"i", pr.i}, {"j", pr.j}, {"ratio", rational_json(pr.ratio)}});
    doc["pairwise_ratios"] = pairs;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
    std::cout << "closure dimension: " << rep.closure_dimension
              << " (traceless " << rep.traceless_dimension << ")\n";
    std::cout << "scheme rank: " << rep.scheme_rank
              << "  sigma16/sigma1: " << rep.scheme_sv_ratio << "\n";
    std::cout << "classical: " << (rep.classical ? "yes" : "no")
              << (rep.strict_permutation ? " (plain permutation)" : "")
              << "  local: " << (rep.local ? "yes" : "no") << "\n";
    std::cout << "eigenphases (phase, phase/pi, rational p/q):\n";
    for (int j = 0; j < 4; ++j) {
      const RationalApprox& r = rep.eigenphases.approximations[j];
      std::cout << "  " << rep.eigenphases.phases[j] << "  "
                << rep.eigenphases.phases[j] / kPi << "  ";
      if (r.rational)
        std::cout << r.p << "/" << r.q << "\n";
      else
        std::cout << "irrational at q <= 1000\n";
    }
  }
  if (is_universal(rep.verdict)) return 0;
  if (rep.verdict == Verdict::Inconclusive) return 3;
  return 2;
}

int run_synthesize(const GateInput& gate_in, const GateInput& target_in,
                   bool target_random, int depth, std::uint64_t seed,
                   bool phase_invariant, bool json_mode) {
  const ParsedGate g = load_gate(gate_in, "gate");
  Unitary4 target = gate_identity();
  if (target_random) {
    RngStream stream(seed, 0);
    target = haar_random_unitary(stream);
  } else {
    target = load_gate(target_in, "target").u;
  }
  out_for(json_mode) << "seed: " << seed << "\n";
  const SynthesisResult res = synthesize(target, g.u, depth, phase_invariant);

  if (json_mode) {
    json doc;
    doc["command"] = "synthesize";
    doc["seed"] = seed;
    doc["depth"] = depth;
    doc["phase_invariant"] = phase_invariant;
    doc["target_random"] = target_random;
    doc["word"] = res.best_word.letters;
    doc["word_length"] = res.best_word.letters.size();
    doc["achieved_distance"] = res.achieved_distance;
    doc["realized"] = emit_gate(res.best_word.realized);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "word: "
              << (res.best_word.letters.empty() ? "(empty)" : res.best_word.letters)
              << "\n";
    std::cout << "length: " << res.best_word.letters.size() << " (depth bound "
              << depth << ")\n";
    std::cout << "distance: " << res.achieved_distance << "\n";
  }
  return 0;
}

int run_sample(int n, std::uint64_t seed, bool json_mode) {
  out_for(json_mode) << "seed: " << seed << "\n";
  const SurveyDetail d = survey_detailed(n, seed);
  const double fraction =
      static_cast<double>(d.base.n_universal_by_scheme) / d.base.n_samples;

  if (json_mode) {
    json doc;
    doc["command"] = "sample";
    doc["seed"] = seed;
    doc["n_samples"] = d.base.n_samples;
    doc["n_universal_by_scheme"] = d.base.n_universal_by_scheme;
    doc["fraction_universal_by_scheme"] = fraction;
    doc["sv_ratio_histogram"] = d.base.sv_ratio_histogram;
    json counts;
    for (int v = 0; v < 6; ++v)
      counts[verdict_name(static_cast<Verdict>(v))] = d.verdict_counts[v];
    doc["verdict_counts"] = counts;
    doc["min_sv_ratio"] = d.min_sv_ratio;
    doc["max_sv_ratio"] = d.max_sv_ratio;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "samples: " << d.base.n_samples << "\n";
    std::cout << "UniversalByScheme: " << d.base.n_universal_by_scheme << " ("
              << fraction << ")\n";
    std::cout << "verdicts:\n";
    for (int v = 0; v < 6; ++v)
      if (d.verdict_counts[v] > 0)
        std::cout << "  " << verdict_name(static_cast<Verdict>(v)) << ": "
                  << d.verdict_counts[v] << "\n";
    std::cout << "sigma16/sigma1 range: [" << d.min_sv_ratio << ", "
              << d.max_sv_ratio << "]\n";
    std::cout << "histogram of sigma16/sigma1 (20 log buckets over [1e-12, 1]):\n";
    for (int b = 0; b < 20; ++b)
      if (d.base.sv_ratio_histogram[b] > 0)
        std::cout << "  bucket " << b << ": " << d.base.sv_ratio_histogram[b]
                  << "\n";
  }
  return 0;
}

int run_probe(const GateInput& in, double radius, int n, std::uint64_t seed,
              bool json_mode) {
  const ParsedGate g = load_gate(in, "gate");
  out_for(json_mode) << "seed: " << seed << "\n";
  const double fraction = neighborhood_probe(g.u, radius, n, seed);
  if (json_mode) {
    json doc;
    doc["command"] = "probe";
    doc["seed"] = seed;
    doc["radius"] = radius;
    doc["n"] = n;
    doc["fraction_universal"] = fraction;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "radius: " << radius << "  perturbations: " << n << "\n";
    std::cout << "fraction universal: " << fraction << "\n";
  }
  return 0;
}

int run_demo_trotter(const std::vector<long long>& grid, std::uint64_t seed,
                     bool json_mode) {
  if (grid.empty()) throw validation_error("demo-trotter: empty n grid");
  for (long long n : grid)
    if (n < 1) throw validation_error("demo-trotter: n values must be >= 1");
  out_for(json_mode) << "seed: " << seed << "\n";
  RngStream sp(seed, 0), sq(seed, 1);
  const Hermitian4 p = unit_norm_hermitian(sp);
  const Hermitian4 q = unit_norm_hermitian(sq);

  struct Row {
    long long n;
    double sum_error, sum_ratio, comm_error, comm_ratio;
  };
  std::vector<Row> rows;
  double prev_sum = 0.0, prev_comm = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Row r{};
    r.n = grid[i];
    r.sum_error = trotter_sum(p, q, 1.0, 1.0, r.n).error;
    r.comm_error = trotter_commutator(p, q, r.n).error;
    r.sum_ratio = i > 0 && prev_sum > 0.0 ? r.sum_error / prev_sum : 0.0;
    r.comm_ratio = i > 0 && prev_comm > 0.0 ? r.comm_error / prev_comm : 0.0;
    prev_sum = r.sum_error;
    prev_comm = r.comm_error;
    rows.push_back(r);
  }

  if (json_mode) {
    json doc;
    doc["command"] = "demo-trotter";
    doc["seed"] = seed;
    json jrows = json::array();
    for (const Row& r : rows)
      jrows.push_back(json{{"n", r.n},
                           {"sum_error", r.sum_error},
                           {"sum_ratio", r.sum_ratio},
                           {"commutator_error", r.comm_error},
                           {"commutator_ratio", r.comm_ratio}});
    doc["rows"] = jrows;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "n       sum_error    ratio     comm_error   ratio\n";
    for (const Row& r : rows) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-7lld %-12.5e %-9.4f %-12.5e %-9.4f\n",
                    r.n, r.sum_error, r.sum_ratio, r.comm_error, r.comm_ratio);
      std::cout << buf;
    }
  }
  return 0;
}

struct ClaimResult {
  std::string name;
  json measured;
  std::string threshold;
  bool pass = false;
};

int run_verify_paper(std::uint64_t seed, const std::vector<std::string>& skip,
                     bool json_mode) {
  auto skipped = [&](const std::string& name) {
    for (const std::string& s : skip)
      if (s == name) return true;
    return false;
  };
  std::vector<ClaimResult> results;
  const Hermitian4 h1A = log_unitary(gate_barenco(0.3, 0.4, 0.5));

  if (!skipped("scheme-rank")) {
    const GeneratorScheme s = build_scheme(h1A);
    ClaimResult r;
    r.name = "scheme-rank";
    r.measured = json{{"rank", s.rank}, {"sv_ratio", s.sv_ratio}};
    r.threshold = "rank = 16 (sigma16/sigma1 > 1e-7)";
    r.pass = s.rank == 16;
    results.push_back(r);
  }
  if (!skipped("simple-scheme")) {
    const GeneratorScheme s = build_simple_scheme(h1A);
    ClaimResult r;
    r.name = "simple-scheme";
    r.measured = json{{"rank", s.rank}, {"sv_ratio", s.sv_ratio}};
    r.threshold = "rank < 16";
    r.pass = s.rank < 16;
    results.push_back(r);
  }
  if (!skipped("delta-polynomial")) {
    const Hermitian4 h1 = log_unitary(gate_cnot());
    const PolynomialDegreeReport rep = verify_polynomial_degree(h1, h1A);
    const GeneratorScheme at1 = build_scheme(h1A);
    ClaimResult r;
    r.name = "delta-polynomial";
    r.measured = json{{"max_relative_residual", rep.max_relative_residual},
                      {"degenerate", rep.degenerate_family},
                      {"rank_at_k_1", at1.rank}};
    r.threshold = "residual <= 1e-3 and Delta(1) != 0 (rank 16 at k = 1)";
    r.pass = rep.is_polynomial_deg_le_100 && at1.rank == 16;
    results.push_back(r);
  }
  if (!skipped("trotter-rates")) {
    double sum_acc = 0.0, comm_acc = 0.0;
    const int pairs = 20;
    for (int i = 0; i < pairs; ++i) {
      RngStream sp(seed, static_cast<std::uint64_t>(2 * i));
      RngStream sq(seed, static_cast<std::uint64_t>(2 * i + 1));
      const Hermitian4 p = unit_norm_hermitian(sp);
      const Hermitian4 q = unit_norm_hermitian(sq);
      sum_acc += trotter_sum(p, q, 1.0, 1.0, 512).error /
                 trotter_sum(p, q, 1.0, 1.0, 256).error;
      comm_acc += trotter_commutator(p, q, 1024).error /
                  trotter_commutator(p, q, 256).error;
    }
    ClaimResult r;
    r.name = "trotter-rates";
    r.measured = json{{"sum_ratio", sum_acc / pairs},
                      {"commutator_ratio", comm_acc / pairs}};
    r.threshold = "sum in [0.4, 0.6], commutator in [0.35, 0.65]";
    r.pass = sum_acc / pairs >= 0.4 && sum_acc / pairs <= 0.6 &&
             comm_acc / pairs >= 0.35 && comm_acc / pairs <= 0.65;
    results.push_back(r);
  }
  if (!skipped("survey")) {
    const SurveyResult s = survey(1000, seed);
    const double fraction =
        static_cast<double>(s.n_universal_by_scheme) / s.n_samples;
    ClaimResult r;
    r.name = "survey";
    r.measured = json{{"fraction_universal_by_scheme", fraction}};
    r.threshold = ">= 0.999";
    r.pass = fraction >= 0.999;
    results.push_back(r);
  }
  if (!skipped("neighborhood")) {
    const double fraction = measure_neighborhood(h1A, 1e-3, 200, seed);
    ClaimResult r;
    r.name = "neighborhood";
    r.measured = json{{"fraction_universal", fraction}};
    r.threshold = "= 1.0 at radius 1e-3, n = 200";
    r.pass = fraction == 1.0;
    results.push_back(r);
  }
  if (!skipped("decay")) {
    RngStream gate_stream(seed, std::uint64_t{1} << 20);
    const Unitary4 gate = haar_random_unitary(gate_stream);
    const DecayResult d = decay_experiment(gate, 10, 16, seed);
    ClaimResult r;
    r.name = "decay";
    r.measured = json{{"slope", d.slope},
                      {"mean_distance", d.mean_distance},
                      {"depths", d.depths}};
    r.threshold = "slope < 0";
    r.pass = d.slope < 0.0;
    results.push_back(r);
  }

  bool all_pass = true;
  for (const ClaimResult& r : results) all_pass = all_pass && r.pass;

  if (json_mode) {
    json doc;
    doc["command"] = "verify-paper";
    doc["seed"] = seed;
    json claims = json::array();
    for (const ClaimResult& r : results)
      claims.push_back(json{{"name", r.name},
                            {"measured", r.measured},
                            {"threshold", r.threshold},
                            {"pass", r.pass}});
    doc["claims"] = claims;
    doc["all_pass"] = all_pass;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "seed: " << seed << "\n";
    for (const ClaimResult& r : results)
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": measured "
                << r.measured.dump() << " against " << r.threshold << "\n";
    std::cout << (all_pass ? "all claims passed" : "some claims failed")
              << " (" << results.size() << " ran)\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit gate universality laboratory"};
  app.require_subcommand(1);
  std::string output_format = "text";
  app.add_option("--output", output_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  GateInput check_gate;
  CLI::App* check = app.add_subcommand("check", "classify a gate");
  add_gate_options(check, check_gate, "gate");

  GateInput syn_gate, syn_target;
  std::string syn_target_token;
  int syn_depth = 12;
  std::uint64_t syn_seed = 42;
  bool syn_phase_invariant = false;
  CLI::App* syn = app.add_subcommand("synthesize", "best word over {U, TUT}");
  add_gate_options(syn, syn_gate, "gate");
  syn->add_option("--target", syn_target_token,
                  "target gate text, or 'random' for a seeded Haar target");
  syn->add_option("--target-file", syn_target.file_path,
                  "path to a file holding the target gate text");
  syn->add_option("--depth", syn_depth, "word length bound (<= 30)")
      ->capture_default_str();
  syn->add_option("--seed", syn_seed, "random seed")->capture_default_str();
  syn->add_flag("--phase-invariant", syn_phase_invariant,
                "score with the global-phase-invariant metric");

  int sample_n = 1000;
  std::uint64_t sample_seed = 42;
  CLI::App* sample = app.add_subcommand("sample", "survey Haar-random gates");
  sample->add_option("--n", sample_n, "number of samples")->capture_default_str();
  sample->add_option("--seed", sample_seed, "random seed")->capture_default_str();

  GateInput probe_gate;
  double probe_radius = 1e-3;
  int probe_n = 200;
  std::uint64_t probe_seed = 42;
  CLI::App* probe = app.add_subcommand("probe", "perturb a universal gate's generator");
  add_gate_options(probe, probe_gate, "gate");
  probe->add_option("--radius", probe_radius, "perturbation radius")
      ->capture_default_str();
  probe->add_option("--n", probe_n, "number of perturbations")
      ->capture_default_str();
  probe->add_option("--seed", probe_seed, "random seed")->capture_default_str();

  std::uint64_t vp_seed = 42;
  std::vector<std::string> vp_skip;
  CLI::App* vp = app.add_subcommand("verify-paper", "run the built-in claim suite");
  vp->add_option("--seed", vp_seed, "random seed")->capture_default_str();
  vp->add_option("--skip", vp_skip, "claim name to skip (repeatable)")
      ->check(CLI::IsMember({"scheme-rank", "simple-scheme", "delta-polynomial",
                             "trotter-rates", "survey", "neighborhood", "decay"}));

  std::vector<long long> trotter_grid{64, 128, 256};
  std::uint64_t trotter_seed = 42;
  CLI::App* demo = app.add_subcommand("demo-trotter", "product-formula error table");
  demo->add_option("--n", trotter_grid, "comma-separated step counts")
      ->delimiter(',')
      ->capture_default_str();
  demo->add_option("--seed", trotter_seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const bool json_mode = output_format == "json";
  try {
    if (check->parsed()) return run_check(check_gate, json_mode);
    if (syn->parsed()) {
      const bool target_random =
          syn_target_token == "random" ||
          (syn_target_token.empty() && syn_target.file_path.empty());
      syn_target.inline_text = syn_target_token == "random" ? "" : syn_target_token;
      return run_synthesize(syn_gate, syn_target, target_random, syn_depth,
                            syn_seed, syn_phase_invariant, json_mode);
    }
    if (sample->parsed()) return run_sample(sample_n, sample_seed, json_mode);
    if (probe->parsed())
      return run_probe(probe_gate, probe_radius, probe_n, probe_seed, json_mode);
    if (vp->parsed()) return run_verify_paper(vp_seed, vp_skip, json_mode);
    if (demo->parsed())
      return run_demo_trotter(trotter_grid, trotter_seed, json_mode);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
