// Command-line front end: one subcommand per library operation, JSON on
// stdout (or --output), exit codes 0/2/3/4/5 as documented in the README.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hampack/errors.hpp"
#include "hampack/experiments.hpp"

namespace {

using hampack::ExperimentConfig;

struct RawOptions {
  std::map<std::string, std::string> rationals;
  std::string mode;
  bool exact = false;
  bool heuristic = false;
  bool mc = false;
};

struct Subcommand {
  CLI::App* app;
  ExperimentConfig config;
  RawOptions raw;
};

void add_rational(Subcommand& s, const std::string& name, const std::string& help) {
  s.app->add_option("--" + name, s.raw.rationals[name], help + " (decimal or a/b)");
}

void finish(Subcommand& s) {
  auto& c = s.config;
  auto take = [&](const char* name, std::optional<hampack::Rational>& into) {
    auto it = s.raw.rationals.find(name);
    if (it != s.raw.rationals.end() && !it->second.empty()) {
      into = hampack::parse_rational(it->second);
    }
  };
  take("p", c.p);
  take("eta", c.eta);
  take("epsilon", c.epsilon);
  take("nu", c.nu);
  take("tau", c.tau);
  take("kappa", c.kappa);
  take("min-degree-ratio", c.min_degree_ratio);
  if (s.raw.exact + s.raw.heuristic + s.raw.mc > 1) {
    throw hampack::InputError("choose at most one of --exact, --heuristic, --mc");
  }
  if (s.raw.exact) c.mode = "exact";
  if (s.raw.heuristic) c.mode = "heuristic";
  if (s.raw.mc) c.mode = "mc";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton packing, even factors and robust expansion toolkit"};
  app.require_subcommand(1);
  std::string output;
  bool timing = false;
  app.add_option("-o,--output", output, "Write the result here instead of stdout");
  app.add_flag("--timing", timing, "Include wall time in JSON records");

  std::vector<std::unique_ptr<Subcommand>> subs;
  auto make = [&](const std::string& name, const std::string& help) -> Subcommand& {
    auto s = std::make_unique<Subcommand>();
    s->app = app.add_subcommand(name, help);
    s->config.command = name;
    s->app->add_option("--seed", s->config.seed, "Random seed")->capture_default_str();
    subs.push_back(std::move(s));
    return *subs.back();
  };
  auto input = [](Subcommand& s) {
    s.app->add_option("-i,--input", s.config.inputs, "Edge-list file")->required();
  };

  {
    auto& s = make("construct", "Emit a named graph as an edge list");
    s.app->add_option("--kind", s.config.kind,
                      "babai|extremal|complete|bipartite|two-cliques|cycle|gnp|petersen")
        ->required();
    s.app->add_option("--n", s.config.n);
    s.app->add_option("--delta", s.config.delta);
    s.app->add_option("--m", s.config.m);
    add_rational(s, "p", "Edge probability for gnp");
  }
  {
    auto& s = make("regeven", "Largest even r with an r-factor");
    input(s);
  }
  {
    auto& s = make("bounds", "Lower and upper bounds on reg_even(n, delta)");
    s.app->add_option("--n", s.config.n)->required();
    s.app->add_option("--delta", s.config.delta)->required();
  }
  {
    auto& s = make("factor", "Decide r-factor existence; emit the factor or a certificate");
    input(s);
    s.app->add_option("--r", s.config.r)->required();
    s.app->add_option("--emit", s.config.emit, "Write the factor as an edge list");
  }
  {
    auto& s = make("tutte", "Gadget decision, optionally checked over all (S, T)");
    input(s);
    s.app->add_option("--r", s.config.r)->required();
    s.app->add_flag("--exhaustive", s.config.exhaustive, "Enumerate all 3^n pairs (n <= 14)");
  }
  {
    auto& s = make("expander", "Robust (nu, tau)-expansion check");
    input(s);
    add_rational(s, "nu", "Robust neighbourhood fraction");
    add_rational(s, "tau", "Size window fraction");
    s.app->add_flag("--exact", s.raw.exact, "Exhaustive check (n <= 22)");
    s.app->add_flag("--mc", s.raw.mc, "Monte-Carlo refutation");
    s.app->add_option("--samples", s.config.samples)->capture_default_str();
    s.app->add_flag("--directed", s.config.directed, "Input is an arc list (outexpansion)");
  }
  {
    auto& s = make("orient", "Balanced orientation as an arc list");
    input(s);
    s.app->add_option("--emit", s.config.emit, "Write the arc list here");
  }
  {
    auto& s = make("sparse-factor", "Seeded search for an (epsilon n)-factor that expands");
    input(s);
    add_rational(s, "epsilon", "Factor degree fraction");
    add_rational(s, "nu", "Target nu");
    add_rational(s, "tau", "Target tau");
    s.app->add_option("--attempts", s.config.attempts)->capture_default_str();
  }
  {
    auto& s = make("extremal", "Search for an eta-extremal partition");
    input(s);
    add_rational(s, "eta", "Slack parameter");
    s.app->add_flag("--exact", s.raw.exact, "Enumerate all partitions (n <= 14)");
    s.app->add_flag("--heuristic", s.raw.heuristic, "Seeded local search");
    s.app->add_option("--restarts", s.config.restarts)->capture_default_str();
  }
  {
    auto& s = make("closeness", "Distance to the bipartite or two-clique extremal family");
    input(s);
    s.app->add_option("--kind", s.config.kind, "bipartite|cliques")->required();
    add_rational(s, "epsilon", "Closeness parameter");
    s.app->add_flag("--exact", s.raw.exact, "Enumerate balanced sets (n <= 24)");
    s.app->add_flag("--heuristic", s.raw.heuristic, "Seeded swap search");
    s.app->add_option("--restarts", s.config.restarts)->capture_default_str();
  }
  {
    auto& s = make("classify", "Closeness / expansion trichotomy");
    input(s);
    add_rational(s, "kappa", "Minimum degree slack");
    add_rational(s, "nu", "Robust neighbourhood fraction");
    add_rational(s, "tau", "Size window fraction");
    add_rational(s, "epsilon", "Closeness parameter");
    s.app->add_option("--samples", s.config.samples)->capture_default_str();
  }
  {
    auto& s = make("ham", "Find a Hamilton cycle (n <= 64)");
    input(s);
  }
  {
    auto& s = make("pack", "Search for edge-disjoint Hamilton cycles");
    input(s);
    s.app->add_option("--target", s.config.target)->required();
    s.app->add_option("--budget", s.config.budget, "Node expansions; <= 0 for unlimited")
        ->capture_default_str();
  }
  {
    auto& s = make("maxpack", "Maximum Hamilton packing (n <= 12)");
    input(s);
  }
  {
    auto& s = make("decompose", "Hamilton decomposition of an even-regular graph");
    input(s);
    s.config.budget = 0;
    s.app->add_option("--budget", s.config.budget,
                      "Node expansions; 0 picks unlimited for n <= 12");
  }
  {
    auto& s = make("conjecture", "Packing versus reg_even on one graph (n <= 12)");
    input(s);
  }
  {
    auto& s = make("ensemble", "Seeded batch of random graphs, one CSV row each");
    s.app->add_option("--task", s.config.task, "expander|regeven|conjecture|tutte")->required();
    s.app->add_option("--count", s.config.count)->required();
    s.app->add_option("--n", s.config.n, "Smallest order")->required();
    s.app->add_option("--n-max", s.config.n_max, "Largest order (default --n)");
    add_rational(s, "p", "Edge probability (default 1/2)");
    add_rational(s, "min-degree-ratio", "Resample until delta >= ratio * n");
    add_rational(s, "epsilon", "expander task: epsilon (default 1/5)");
    add_rational(s, "tau", "expander task: tau (default 1/2)");
    add_rational(s, "nu", "expander task: nu (default epsilon*tau/2)");
    s.app->add_option("--samples", s.config.samples)->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    for (auto& s : subs) {
      if (!s->app->parsed()) continue;
      finish(*s);
      std::string text;
      if (s->config.command == "ensemble") {
        text = hampack::ensemble(s->config);
      } else {
        const hampack::RunRecord rec = hampack::run(s->config);
        text = rec.text ? *rec.text : hampack::to_json(rec, timing).dump(2) + "\n";
        if (rec.text && timing) std::cerr << "wall_seconds " << rec.wall_seconds << "\n";
      }
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw hampack::InputError("cannot write '" + output + "'");
        out << text;
      }
    }
  } catch (const hampack::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
