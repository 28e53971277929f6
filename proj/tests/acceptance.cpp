// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every criterion has its own wall-clock limit; exceeding it is a failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hampack/constructions.hpp"
#include "hampack/errors.hpp"
#include "hampack/expanders.hpp"
#include "hampack/experiments.hpp"
#include "hampack/extremality.hpp"
#include "hampack/factors.hpp"
#include "hampack/hamilton.hpp"
#include "hampack/io.hpp"
#include "hampack/rng.hpp"
#include "oracles.hpp"

using namespace hampack;

namespace {

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  /// Returns an empty string on success, else the reason.
  std::function<std::string()> check;
};

Graph complete(int n) { return reference_graph(n, ReferenceKind::complete); }

std::string fail(const std::string& why) { return why.empty() ? "failed" : why; }

std::string bounds_evaluation() {
  const RegEvenBounds b = regeven_bounds(8, 4);
  if (b.lower != 2 || b.upper != 3.0) {
    return fail("bounds(8,4) = (" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + ")");
  }
  if (regeven_bounds(16, 8).lower != 4) return fail("bounds(16,8).lower != 4");
  for (int n = 8; n <= 1024; n += 8) {
    if (regeven_bounds(n, n / 2).lower != n / 4) return fail("lower != n/4 at n=" + std::to_string(n));
  }
  return {};
}

std::string babai_packing() {
  const Graph g = babai_graph(2);
  const MaxPacking m = max_packing_exact(g);
  const int reg = reg_even_of_graph(g).degree;
  if (m.max != 1) return fail("max packing " + std::to_string(m.max));
  if (reg != 2) return fail("reg_even " + std::to_string(reg));
  if (2 * m.max != reg) return fail("packing differs from reg_even/2");
  if (!verify_packing(g, m.packing).ok) return fail("packing audit");
  return {};
}

std::string tutte_equivalence() {
  auto compare = [](const Graph& g) -> std::string {
    for (int r = 0; r < g.order(); ++r) {
      const bool gadget = r_factor_exists(g, r).exists;
      const bool exhaustive = tutte_verify_exhaustive(g, r);
      const bool brute = oracle::has_r_regular_subgraph(g, r);
      if (gadget != exhaustive || gadget != brute) {
        return "disagreement on " + format_edge_list(g) + " r=" + std::to_string(r);
      }
    }
    return {};
  };
  int graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code, ++graphs) {
      if (auto e = compare(oracle::graph_from_code(n, code)); !e.empty()) return e;
    }
  }
  int random = 0;
  for (std::uint64_t seed = 1; random < 500; ++seed, ++random) {
    Rng rng(seed);
    const int n = 6 + static_cast<int>(rng.below(2));
    const Rational p(1 + static_cast<int>(rng.below(9)), 10);
    if (auto e = compare(random_graph(n, p, derive_seed(seed, 1))); !e.empty()) return e;
  }
  std::printf("       %d exhaustive graphs (n <= 5), %d random graphs (n in 6..7)\n", graphs, random);
  return {};
}

std::string extremal_tightness() {
  int checked = 0;
  for (int n = 16; n <= 64; ++n) {
    for (int delta = n / 2 + 1; delta < n; ++delta) {
      const ExtremalGraph e = extremal_graph(n, delta);
      if (e.graph.min_degree() != delta) {
        return fail("min degree at n=" + std::to_string(n) + " delta=" + std::to_string(delta));
      }
      const int reg = reg_even_of_graph(e.graph).degree;
      if (!regeven_bounds(n, delta).admits(reg)) {
        return fail("reg_even " + std::to_string(reg) + " above upper at n=" + std::to_string(n) +
                    " delta=" + std::to_string(delta));
      }
      ++checked;
    }
  }
  std::printf("       %d (n, delta) pairs\n", checked);
  return {};
}

std::string min_degree_expansion() {
  const RobustParams p = min_degree_implies_expander_params(Rational(1, 5), Rational(1, 2));
  if (p.nu != Rational(1, 20)) return fail("nu != 0.05");
  int certified = 0;
  for (std::uint64_t row = 0; row < 200; ++row) {
    Rng rng(derive_seed(2024, row));
    const int n = 8 + static_cast<int>(rng.below(11));
    std::optional<Graph> pick;
    for (std::uint64_t attempt = 1; !pick; ++attempt) {
      if (attempt > 10000) return fail("could not sample delta >= 0.7n");
      Graph g = random_graph(n, Rational(17, 20), derive_seed(derive_seed(2024, row), attempt));
      if (Rational(g.min_degree()) >= Rational(7, 10) * n) pick = std::move(g);
    }
    const ExpanderVerdict v = is_robust_expander_exact(*pick, p);
    if (!v.certified()) return fail("row " + std::to_string(row) + " not certified");
    ++certified;
  }
  std::printf("       %d graphs certified\n", certified);
  return {};
}

std::string refutation_soundness() {
  const Graph g = reference_graph(12, ReferenceKind::two_cliques);
  const RobustParams p(Rational(1, 10), Rational(2, 5));
  VertexSet first(12), second(12);
  for (int v = 0; v < 6; ++v) first.insert(v);
  for (int v = 6; v < 12; ++v) second.insert(v);

  const ExpanderVerdict exact = is_robust_expander_exact(g, p);
  if (!exact.refuted() || !violates_expansion(g, *exact.witness, p)) return fail("exact");
  // the exact witness is lexicographically first, a subset of one clique
  if (!exact.witness->is_subset_of(first)) return fail("exact witness spans both cliques");
  const ExpanderVerdict mc = refute_robust_expander_mc(g, p, kDefaultMcSamples, 1);
  if (!mc.refuted() || !violates_expansion(g, *mc.witness, p)) return fail("monte-carlo");
  if (!(*mc.witness == first || *mc.witness == second)) return fail("witness is not one clique");

  int witnesses = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph r = random_graph(12, Rational(2, 5), seed);
    for (const RobustParams& q : {RobustParams(Rational(1, 10), Rational(1, 4)),
                                  RobustParams(Rational(1, 20), Rational(1, 3))}) {
      for (const ExpanderVerdict& v :
           {is_robust_expander_exact(r, q), refute_robust_expander_mc(r, q, 100, seed)}) {
        if (v.witness) {
          if (!violates_expansion(r, *v.witness, q)) return fail("witness does not violate");
          ++witnesses;
        }
      }
    }
  }
  std::printf("       exact witness {%s}, monte-carlo witness is a clique, %d more re-validated\n",
              [&] {
                std::string s;
                for (int v : exact.witness->members()) s += (s.empty() ? "" : ",") + std::to_string(v);
                return s;
              }()
                  .c_str(),
              witnesses);
  return {};
}

std::string decompositions() {
  for (int n : {5, 7, 9}) {
    const Graph g = complete(n);
    const Packing p = decompose_even_regular(g);
    if (!p.complete || static_cast<int>(p.cycles.size()) != (n - 1) / 2) {
      return fail("K_" + std::to_string(n));
    }
    if (!verify_packing(g, p).ok) return fail("audit on K_" + std::to_string(n));
    std::set<Edge> covered;
    for (const HamCycle& c : p.cycles) {
      for (const Edge& e : c.edges()) covered.insert(e);
    }
    if (static_cast<std::int64_t>(covered.size()) != g.size()) return fail("edges left over");
  }
  return {};
}

std::string conjecture_ensemble() {
  ExperimentConfig c;
  c.command = "ensemble";
  c.task = "conjecture";
  c.n = 4;
  c.n_max = 10;
  c.count = 100;
  c.min_degree_ratio = Rational(1, 2);
  c.seed = 1;
  const std::string csv = ensemble(c);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  int holds = 0, counter = 0;
  while (std::getline(in, line)) {
    if (line.rfind("summary,", 0) == 0) continue;
    if (line.find(",holds,") != std::string::npos) {
      ++holds;
    } else if (line.find(",counterexample,") != std::string::npos) {
      ++counter;
      std::printf("       counterexample row: %s\n", line.c_str());
    } else {
      return fail("row error: " + line);
    }
  }
  if (holds + counter != 100) return fail("expected 100 rows");
  std::printf("       %d holds, %d counterexamples\n", holds, counter);
  return {};
}

std::string sparsification() {
  const ExtremalGraph e = extremal_graph(16, 9);
  Graph g = e.graph;
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(1, 4);
  const int delta = g.min_degree();
  const Graph out = greedy_sparsify(g, e.partition.a);
  if (out.min_degree() != delta) return fail("minimum degree changed");
  for (const Edge& x : out.edges()) {
    if (e.partition.a.contains(x.u) && e.partition.a.contains(x.v) && out.degree(x.u) > delta &&
        out.degree(x.v) > delta) {
      return fail("removable A-edge left behind");
    }
  }
  return {};
}

std::string extremality() {
  const ExtremalGraph e = extremal_graph(16, 9);
  const Rational eta(1, 5);
  const ExtremalityReport r = check_eta_extremal_pair(e.graph, eta, e.partition);
  if (!(r.e1 && r.e2 && r.e3 && r.e4 && r.e5 && r.extremal)) return fail("flags on extremal(16,9)");
  if (Rational(r.uncovered) > 2 * eta * 16) return fail("E5 slack");
  const ExtremalityReport neg = find_eta_extremal_witness(
      random_graph(12, Rational(1, 2), 1), Rational(1, 20), {SearchMode::exact, 1, kDefaultRestarts});
  if (neg.extremal || !neg.definitive) return fail("random(12,0.5) at eta=0.05");
  return {};
}

std::string closeness_exactness() {
  if (closeness(complete(12), ClosenessKind::two_cliques, Rational(1, 10)).score != 36) {
    return fail("K_12 two-cliques score");
  }
  if (closeness(reference_graph(12, ReferenceKind::complete_bipartite), ClosenessKind::bipartite,
                Rational(1, 10))
          .score != 0) {
    return fail("K_6,6 bipartite score");
  }
  int compared = 0;
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const Graph g = random_graph(n, Rational(static_cast<int>(seed), 7), derive_seed(n, seed));
      for (ClosenessKind kind : {ClosenessKind::bipartite, ClosenessKind::two_cliques}) {
        const ClosenessReport r = closeness(g, kind, Rational(1, 10), {SearchMode::exact, 1, 1});
        if (r.score != oracle::min_closeness(g, kind == ClosenessKind::bipartite)) {
          return fail("mismatch at n=" + std::to_string(n));
        }
        ++compared;
      }
    }
  }
  std::printf("       %d exact runs matched brute force\n", compared);
  return {};
}

std::string determinism() {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hampack_acceptance";
  std::filesystem::create_directories(dir);
  const std::string input = (dir / "g.txt").string();
  std::ofstream(input) << format_edge_list(random_graph(18, Rational(3, 5), 77));
  const std::string big = (dir / "h.txt").string();
  std::ofstream(big) << format_edge_list(extremal_graph(20, 12).graph);

  std::vector<ExperimentConfig> configs;
  auto add = [&](const std::string& command, const std::string& in) -> ExperimentConfig& {
    ExperimentConfig c;
    c.command = command;
    if (!in.empty()) c.inputs = {in};
    c.seed = 13;
    configs.push_back(c);
    return configs.back();
  };
  {
    auto& c = add("construct", "");
    c.kind = "gnp";
    c.n = 40;
    c.p = Rational(1, 3);
  }
  {
    auto& c = add("expander", input);
    c.nu = Rational(1, 20);
    c.tau = Rational(1, 4);
    c.mode = "mc";
    c.samples = 500;
  }
  {
    auto& c = add("extremal", big);
    c.eta = Rational(1, 5);
    c.mode = "heuristic";
  }
  {
    auto& c = add("closeness", big);
    c.kind = "cliques";
    c.epsilon = Rational(1, 10);
    c.mode = "heuristic";
  }
  {
    auto& c = add("sparse-factor", input);
    c.epsilon = Rational(1, 9);
    c.nu = Rational(1, 50);
    c.tau = Rational(1, 4);
  }
  add("regeven", input);
  add("orient", input);

  auto render = [](const ExperimentConfig& c) {
    const RunRecord r = run(c);
    return r.text ? *r.text : to_json(r, false).dump(2);
  };
  for (const ExperimentConfig& c : configs) {
    if (render(c) != render(c)) return fail(c.command + " differs between runs");
  }

  ExperimentConfig e;
  e.command = "ensemble";
  e.task = "expander";
  e.n = 8;
  e.n_max = 12;
  e.count = 20;
  e.seed = 5;
  ::setenv("HAMPACK_WORKERS", "1", 1);
  const std::string serial = ensemble(e);
  ::setenv("HAMPACK_WORKERS", "3", 1);
  const std::string parallel = ensemble(e);
  ::unsetenv("HAMPACK_WORKERS");
  if (serial != parallel || serial != ensemble(e)) return fail("ensemble differs between runs");

#ifdef HAMPACK_CLI_PATH
  auto cli = [&](const std::string& out) {
    const std::string cmd = std::string(HAMPACK_CLI_PATH) + " expander -i " + input +
                            " --nu 0.05 --tau 0.25 --mc --samples 300 --seed 3 > " + out;
    return std::system(cmd.c_str());
  };
  if (cli((dir / "a.json").string()) != 0 || cli((dir / "b.json").string()) != 0) {
    return fail("cli run failed");
  }
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  if (slurp(dir / "a.json") != slurp(dir / "b.json")) return fail("cli output differs");
#endif
  std::printf("       %zu commands, ensemble and cli output repeated byte for byte\n",
              configs.size());
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bounds evaluation: (8,4) -> (2,3), (16,8) -> 4, n/4 when 8 | n", 0.001,
       bounds_evaluation},
      {2, "babai(2): max packing 1 = reg_even/2", 10, babai_packing},
      {3, "gadget <=> exhaustive Tutte <=> brute force", 300, tutte_equivalence},
      {4, "extremal graphs stay below the upper bound, n in 16..64", 120, extremal_tightness},
      {5, "delta >= 0.7n certifies (0.05, 0.5)-expansion, 200 graphs", 120, min_degree_expansion},
      {6, "expansion witnesses re-validate; two cliques refuted", 1, refutation_soundness},
      {7, "Hamilton decompositions of K_5, K_7, K_9", 30, decompositions},
      {8, "packing >= reg_even/2 over a 100-graph ensemble", 600, conjecture_ensemble},
      {9, "greedy sparsification keeps delta", 1, sparsification},
      {10, "extremality recognition and exact negative", 60, extremality},
      {11, "closeness exact values and brute-force agreement", 60, closeness_exactness},
      {12, "seeded commands are byte-identical across runs", 120, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > c.limit_seconds) {
      reason = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    const bool ok = reason.empty();
    failed += !ok;
    std::printf("[%s] %2d %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                ok ? "" : ": ", reason.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
