#include "hampack/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "hampack/constructions.hpp"
#include "hampack/errors.hpp"
#include "hampack/factors.hpp"
#include "hampack/io.hpp"
#include "hampack/rng.hpp"

namespace hampack {

using nlohmann::json;

json to_json(const VertexSet& s) { return json(s.members()); }

namespace {

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json rational_json(const Rational& x) { return to_string(x); }

json certificate_json(const TutteCertificate& c) {
  return {{"S", to_json(c.s)}, {"T", to_json(c.t)}, {"Qr", c.q_r}, {"Rr", c.r_r}};
}

template <class T>
const T& require(const std::optional<T>& value, const char* name, const std::string& command) {
  if (!value) throw InputError(command + " needs --" + std::string(name));
  return *value;
}

const std::string& single_input(const ExperimentConfig& c) {
  if (c.inputs.size() != 1) throw InputError(c.command + " needs exactly one --input file");
  return c.inputs.front();
}

Graph input_graph(const ExperimentConfig& c) { return load_edge_list(single_input(c)); }

DiGraph input_digraph(const ExperimentConfig& c) {
  std::ifstream in(single_input(c));
  if (!in) throw InputError("cannot open '" + single_input(c) + "'");
  return read_arc_list(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::optional<SearchMode> search_mode(const ExperimentConfig& c) {
  if (!c.mode) return std::nullopt;
  if (*c.mode == "exact") return SearchMode::exact;
  if (*c.mode == "heuristic") return SearchMode::heuristic;
  throw InputError("mode must be exact or heuristic for " + c.command);
}

json config_json(const ExperimentConfig& c) {
  json j;
  j["command"] = c.command;
  j["seed"] = c.seed;
  if (!c.inputs.empty()) j["inputs"] = c.inputs;
  auto put_int = [&](const char* k, const std::optional<int>& v) {
    if (v) j[k] = *v;
  };
  auto put_rat = [&](const char* k, const std::optional<Rational>& v) {
    if (v) j[k] = to_string(*v);
  };
  put_int("n", c.n);
  put_int("delta", c.delta);
  put_int("m", c.m);
  put_int("r", c.r);
  put_int("target", c.target);
  put_rat("p", c.p);
  put_rat("eta", c.eta);
  put_rat("epsilon", c.epsilon);
  put_rat("nu", c.nu);
  put_rat("tau", c.tau);
  put_rat("kappa", c.kappa);
  if (c.kind) j["kind"] = *c.kind;
  if (c.mode) j["mode"] = *c.mode;
  if (c.emit) j["emit"] = *c.emit;
  return j;
}

Graph construct_graph(const ExperimentConfig& c) {
  const std::string kind = require(c.kind, "kind", c.command);
  if (kind == "babai") return babai_graph(require(c.m, "m", c.command));
  if (kind == "extremal") {
    return extremal_graph(require(c.n, "n", c.command), require(c.delta, "delta", c.command))
        .graph;
  }
  if (kind == "gnp") {
    return random_graph(require(c.n, "n", c.command), require(c.p, "p", c.command), c.seed);
  }
  if (kind == "petersen") return petersen_graph();
  return reference_graph(require(c.n, "n", c.command), parse_reference_kind(kind));
}

json factor_decision_json(const FactorDecision& d, int r) {
  json j{{"exists", d.exists}, {"r", r}, {"parity_rejected", d.parity_rejected}};
  if (d.factor) j["factor"] = edges_json(d.factor->mask.edges());
  if (d.certificate) j["certificate"] = certificate_json(*d.certificate);
  return j;
}

RunRecord dispatch(const ExperimentConfig& c) {
  RunRecord rec;
  const std::string& cmd = c.command;

  if (cmd == "construct") {
    const Graph g = construct_graph(c);
    rec.result = {{"n", g.order()}, {"edges", g.size()}};
    rec.text = format_edge_list(g);
    return rec;
  }
  if (cmd == "bounds") {
    const RegEvenBounds b = regeven_bounds(require(c.n, "n", cmd), require(c.delta, "delta", cmd));
    rec.result = {{"n", b.n},         {"delta", b.delta},
                  {"lower", b.lower}, {"upper", b.upper},
                  {"lower_boundary", b.lower_boundary},
                  {"below_half", b.below_half},
                  {"note", b.note}};
    return rec;
  }
  if (cmd == "regeven") {
    const Graph g = input_graph(c);
    const RegEvenResult r = reg_even_of_graph(g);
    rec.result = {{"reg_even", r.degree},
                  {"factor", edges_json(r.factor.mask.edges())},
                  {"verified", r.degree == 0 || audit_factor(g, r.factor)}};
    return rec;
  }
  if (cmd == "factor" || cmd == "tutte") {
    const Graph g = input_graph(c);
    const int r = require(c.r, "r", cmd);
    const FactorDecision d = r_factor_exists(g, r);
    rec.result = factor_decision_json(d, r);
    if (cmd == "tutte" && c.exhaustive) {
      const auto violation = tutte_find_violation(g, r);
      json ex{{"holds", !violation.has_value()}};
      if (violation) ex["violation"] = certificate_json(*violation);
      rec.result["exhaustive"] = ex;
      rec.result["agree"] = d.exists == !violation.has_value();
    }
    if (c.emit) {
      if (!d.factor) throw ExistenceError("no " + std::to_string(r) + "-factor to emit");
      write_file(*c.emit, format_edge_list(d.factor->mask.to_graph()));
    }
    return rec;
  }
  if (cmd == "expander") {
    const RobustParams params(require(c.nu, "nu", cmd), require(c.tau, "tau", cmd));
    const bool mc = c.mode && *c.mode == "mc";
    if (c.mode && !mc && *c.mode != "exact") throw InputError("expander mode is exact or mc");
    ExpanderVerdict v;
    if (c.directed) {
      if (mc) throw InputError("directed expansion has no Monte-Carlo mode");
      v = is_robust_outexpander_exact(input_digraph(c), params);
    } else {
      const Graph g = input_graph(c);
      v = mc ? refute_robust_expander_mc(g, params, c.samples, c.seed)
             : is_robust_expander_exact(g, params);
    }
    rec.provenance = mc ? "monte_carlo" : "exact";
    rec.result = to_json(v);
    return rec;
  }
  if (cmd == "orient") {
    const Graph g = input_graph(c);
    const DiGraph d = eulerian_orientation(g);
    int imbalance = 0;
    for (int v = 0; v < d.order(); ++v) {
      imbalance = std::max(imbalance, std::abs(d.out_degree(v) - d.in_degree(v)));
    }
    rec.result = {{"arcs", d.arc_count()}, {"max_imbalance", imbalance}};
    if (c.emit) {
      write_file(*c.emit, format_arc_list(d));
    } else {
      rec.text = format_arc_list(d);
    }
    return rec;
  }
  if (cmd == "sparse-factor") {
    const Graph g = input_graph(c);
    const RobustParams params(require(c.nu, "nu", cmd), require(c.tau, "tau", cmd));
    const SparseFactorResult s =
        sparse_expander_factor(g, require(c.epsilon, "epsilon", cmd), params, c.seed, c.attempts);
    rec.provenance = to_string(s.verdict.mode) == "exact" ? "exact" : "monte_carlo";
    rec.result = {{"r", s.factor.r},
                  {"factor", edges_json(s.factor.mask.edges())},
                  {"verdict", to_json(s.verdict)},
                  {"attempts_used", s.attempts_used},
                  {"accepted", s.accepted}};
    return rec;
  }
  if (cmd == "extremal") {
    const Graph g = input_graph(c);
    WitnessSearchOptions opt{search_mode(c), c.seed, c.restarts};
    const ExtremalityReport r = find_eta_extremal_witness(g, require(c.eta, "eta", cmd), opt);
    rec.provenance = to_string(r.mode);
    rec.result = to_json(r);
    if (r.extremal) {
      const AlmostRegularAudit a = almost_regular_audit(g, *r.partition, r.eta);
      json below = json::array(), above = json::array();
      for (auto [v, d] : a.below_lower) below.push_back({v, d});
      for (auto [v, d] : a.above_upper) above.push_back({v, d});
      rec.result["almost_regular"] = {{"below_lower", below},
                                      {"above_upper", above},
                                      {"count_within_limit", a.count_within_limit},
                                      {"lower_bound", a.lower_bound},
                                      {"upper_bound", a.upper_bound},
                                      {"count_limit", a.count_limit}};
    }
    return rec;
  }
  if (cmd == "closeness") {
    const Graph g = input_graph(c);
    WitnessSearchOptions opt{search_mode(c), c.seed, c.restarts};
    const ClosenessReport r = closeness(g, parse_closeness_kind(require(c.kind, "kind", cmd)),
                                        require(c.epsilon, "epsilon", cmd), opt);
    rec.provenance = to_string(r.mode);
    rec.result = to_json(r);
    return rec;
  }
  if (cmd == "classify") {
    const Graph g = input_graph(c);
    const TrichotomyReport r = trichotomy_classify(
        g, require(c.kappa, "kappa", cmd), require(c.nu, "nu", cmd), require(c.tau, "tau", cmd),
        require(c.epsilon, "epsilon", cmd), c.seed, c.samples);
    json j{{"label", to_string(r.label)}, {"delta", r.delta}};
    bool heuristic = false;
    if (r.bipartite) {
      j["bipartite"] = to_json(*r.bipartite);
      heuristic |= r.bipartite->mode == SearchMode::heuristic;
    }
    if (r.cliques) {
      j["cliques"] = to_json(*r.cliques);
      heuristic |= r.cliques->mode == SearchMode::heuristic;
    }
    if (r.expansion) j["expansion"] = to_json(*r.expansion);
    if (r.expansion && r.expansion->mode == CheckMode::monte_carlo) {
      rec.provenance = "monte_carlo";
    } else if (heuristic) {
      rec.provenance = "heuristic";
    }
    rec.result = j;
    return rec;
  }
  if (cmd == "ham") {
    const Graph g = input_graph(c);
    const auto cycle = find_hamilton(g);
    rec.result = {{"hamiltonian", cycle.has_value()}};
    if (cycle) rec.result["cycle"] = cycle->order;
    return rec;
  }
  if (cmd == "pack") {
    const Graph g = input_graph(c);
    const Packing p = pack_hamilton(g, require(c.target, "target", cmd), c.budget);
    rec.result = to_json(p, g, !p.budget_exhausted);
    return rec;
  }
  if (cmd == "maxpack") {
    const Graph g = input_graph(c);
    const MaxPacking m = max_packing_exact(g);
    rec.result = to_json(m.packing, g, true);
    rec.result["max"] = m.max;
    rec.result["upper_bound"] = m.upper_bound;
    return rec;
  }
  if (cmd == "decompose") {
    const Graph g = input_graph(c);
    const Packing p = decompose_even_regular(g, c.budget);
    rec.result = to_json(p, g, !p.budget_exhausted);
    return rec;
  }
  if (cmd == "conjecture") {
    const Graph g = input_graph(c);
    const ConjectureReport r = conjecture_experiment(g);
    rec.result = {{"n", r.n},
                  {"delta", r.delta},
                  {"reg_even", r.reg_even},
                  {"bound_lower", r.bounds.lower},
                  {"bound_upper", r.bounds.upper},
                  {"max_packing", r.packing.max},
                  {"packing", to_json(r.packing.packing, g, true)},
                  {"graph_instance_holds", r.graph_instance_holds},
                  {"bound_instance_holds", r.bound_instance_holds},
                  {"verified", r.verified}};
    if (!r.graph_instance_holds || !r.bound_instance_holds) {
      rec.result["counterexample"] = {{"edges", edges_json(g.edges())}, {"n", g.order()}};
    }
    return rec;
  }
  throw InputError("unknown command '" + cmd + "'");
}

}  // namespace

json to_json(const ExtremalityReport& r) {
  json j{{"n", r.n},
         {"delta", r.delta},
         {"eta", rational_json(r.eta)},
         {"alpha", rational_json(r.alpha)},
         {"alpha_plus", rational_json(r.alpha_plus)},
         {"extremal", r.extremal},
         {"mode", to_string(r.mode)},
         {"definitive", r.definitive},
         {"degenerate", r.degenerate},
         {"conditions",
          {{"E1", r.e1}, {"E2", r.e2}, {"E3", r.e3}, {"E4", r.e4}, {"E5", r.e5}}},
         {"thresholds",
          {{"A_low", r.a_lo},
           {"A_high", r.a_hi},
           {"B_low", r.b_lo},
           {"B_high", r.b_hi},
           {"E3_bound", r.e3_bound},
           {"E4_bound", r.e4_bound},
           {"E5_bound", r.e5_bound}}}};
  if (r.mode == SearchMode::heuristic) j["restarts"] = r.restarts;
  if (r.partition) {
    j["A"] = to_json(r.partition->a);
    j["B"] = to_json(r.partition->b);
    j["size_A"] = r.size_a;
    j["size_B"] = r.size_b;
    j["e_AB"] = r.e_ab;
    j["e_B"] = r.e_b;
    j["uncovered"] = r.uncovered;
  }
  return j;
}

json to_json(const ClosenessReport& r) {
  return {{"kind", to_string(r.kind)},
          {"epsilon", rational_json(r.epsilon)},
          {"A", to_json(r.a)},
          {"score", r.score},
          {"threshold", rational_json(r.threshold)},
          {"close", r.close},
          {"mode", to_string(r.mode)},
          {"upper_bound_only", r.upper_bound_only}};
}

json to_json(const ExpanderVerdict& v) {
  json j{{"certified", v.certified()},
         {"refuted", v.refuted()},
         {"status", to_string(v.status)},
         {"mode", to_string(v.mode)}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.mode == CheckMode::monte_carlo) {
    j["samples"] = v.samples;
    j["structured"] = v.structured;
  }
  return j;
}

json to_json(const Packing& p, const Graph& host, bool exact) {
  json cycles = json::array();
  for (const HamCycle& c : p.cycles) cycles.push_back(c.order);
  const PackingAudit audit = verify_packing(host, p);
  json j{{"cycles", cycles},
         {"count", p.cycles.size()},
         {"complete", p.complete},
         {"budget_exhausted", p.budget_exhausted},
         {"nodes", p.nodes},
         {"verified", audit.ok},
         {"exact", exact}};
  if (!audit.ok) j["audit"] = audit.message;
  return j;
}

RunRecord run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec = dispatch(config);
  rec.config = config_json(config);
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

json to_json(const RunRecord& record, bool timing) {
  json j{{"config", record.config},
         {"version", record.version},
         {"provenance", record.provenance},
         {"result", record.result}};
  if (timing) j["wall_seconds"] = record.wall_seconds;
  return j;
}

int default_worker_count() {
  if (const char* env = std::getenv("HAMPACK_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct RowOutcome {
  std::string line;
  std::optional<double> value;
  bool ok = false;
};

RowOutcome ensemble_row(const ExperimentConfig& c, int row) {
  const std::uint64_t row_seed = derive_seed(c.seed, static_cast<std::uint64_t>(row));
  Rng rng(row_seed);
  const int n_lo = require(c.n, "n", "ensemble");
  const int n_hi = c.n_max.value_or(n_lo);
  if (n_hi < n_lo) throw InputError("ensemble needs n <= n-max");
  const Rational p = c.p.value_or(Rational(1, 2));
  const Rational ratio = c.min_degree_ratio.value_or(Rational(0));

  RowOutcome out;
  std::string n_text, edges_text, delta_text, value_text, status, error;
  try {
    const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
    std::optional<Graph> pick;
    for (std::uint64_t attempt = 1; attempt <= 1000 && !pick; ++attempt) {
      Graph g = random_graph(n, p, derive_seed(row_seed, attempt));
      if (Rational(g.min_degree()) >= ratio * n) pick = std::move(g);
    }
    if (!pick) throw ExistenceError("no sample met the minimum-degree condition in 1000 draws");
    const Graph& g = *pick;
    n_text = std::to_string(n);
    edges_text = std::to_string(g.size());
    delta_text = std::to_string(g.min_degree());

    double value = 0;
    if (c.task == "expander") {
      const Rational eps = c.epsilon.value_or(Rational(1, 5));
      const Rational tau = c.tau.value_or(Rational(1, 2));
      const RobustParams params = c.nu ? RobustParams(*c.nu, tau)
                                       : min_degree_implies_expander_params(eps, tau);
      const ExpanderVerdict v =
          n <= 22 ? is_robust_expander_exact(g, params)
                  : refute_robust_expander_mc(g, params, c.samples, derive_seed(row_seed, 0));
      value = v.certified() ? 1 : 0;
      status = to_string(v.status);
      out.ok = v.certified();
    } else if (c.task == "regeven") {
      const int d = reg_even_of_graph(g).degree;
      value = d;
      const RegEvenBounds b = regeven_bounds(n, g.min_degree());
      out.ok = d >= b.lower;
      status = out.ok ? "ok" : "below_lower";
    } else if (c.task == "conjecture") {
      const ConjectureReport r = conjecture_experiment(g);
      if (!r.verified) throw InvariantError("packing failed its audit");
      value = r.packing.max;
      out.ok = r.graph_instance_holds;
      status = out.ok ? "holds" : "counterexample";
    } else if (c.task == "tutte") {
      int disagreements = 0;
      for (int r = 0; r < n; ++r) {
        if (r_factor_exists(g, r).exists != tutte_verify_exhaustive(g, r)) ++disagreements;
      }
      value = disagreements;
      out.ok = disagreements == 0;
      status = out.ok ? "agree" : "disagree";
    } else {
      throw InputError("unknown ensemble task '" + c.task + "'");
    }
    out.value = value;
    value_text = std::to_string(static_cast<std::int64_t>(value));
  } catch (const std::exception& e) {
    status = "error";
    error = e.what();
  }
  out.line = std::to_string(row) + "," + std::to_string(row_seed) + "," + n_text + "," +
             edges_text + "," + delta_text + "," + value_text + "," + status + "," +
             csv_field(error);
  return out;
}

}  // namespace

std::string ensemble(const ExperimentConfig& config) {
  if (config.count < 0) throw InputError("ensemble count must be >= 0");
  static const std::set<std::string> tasks{"expander", "regeven", "conjecture", "tutte"};
  if (!tasks.contains(config.task)) {
    throw InputError("unknown ensemble task '" + config.task + "'");
  }
  const int n_lo = require(config.n, "n", "ensemble");
  if (config.n_max.value_or(n_lo) < n_lo) throw InputError("ensemble needs n <= n-max");
  std::vector<RowOutcome> rows(static_cast<std::size_t>(config.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.count; i = next++) rows[i] = ensemble_row(config, i);
  };
  const int workers = std::min(default_worker_count(), std::max(config.count, 1));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string csv = std::string(kEnsembleHeader) + "\n";
  double lo = 0, hi = 0, sum = 0;
  int valued = 0, ok = 0;
  for (const RowOutcome& r : rows) {
    csv += r.line + "\n";
    if (r.ok) ++ok;
    if (!r.value) continue;
    lo = valued ? std::min(lo, *r.value) : *r.value;
    hi = valued ? std::max(hi, *r.value) : *r.value;
    sum += *r.value;
    ++valued;
  }
  if (config.count > 0) {
    char stats[128];
    std::snprintf(stats, sizeof stats, "min=%.0f;max=%.0f;mean=%.6f", lo, hi,
                  valued ? sum / valued : 0.0);
    csv += "summary,,,,," + std::string(stats) + ",ok=" + std::to_string(ok) + "/" +
           std::to_string(config.count) + ",\n";
  }
  return csv;
}

}  // namespace hampack
