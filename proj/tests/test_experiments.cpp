#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hampack/constructions.hpp"
#include "hampack/errors.hpp"
#include "hampack/experiments.hpp"
#include "hampack/io.hpp"

using namespace hampack;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "hampack_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_graph(const std::string& name, const Graph& g) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << format_edge_list(g);
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int lines = 0;
  for (char c : s) lines += c == '\n';
  return lines;
}

/// Runs the CLI and returns its exit status; stdout goes to `out`.
int cli(const std::string& args, const fs::path& out) {
  const std::string cmd =
      std::string(HAMPACK_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("bounds command") {
  ExperimentConfig c;
  c.command = "bounds";
  c.n = 8;
  c.delta = 4;
  const RunRecord r = run(c);
  CHECK(r.result["lower"] == 2);
  CHECK(r.result["upper"].get<double>() == doctest::Approx(3.0));
  const auto j = to_json(r, false);
  CHECK(j["version"] == kVersion);
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(to_json(r, true).contains("wall_seconds"));
}

TEST_CASE("maxpack and conjecture commands") {
  ExperimentConfig c;
  c.command = "maxpack";
  c.inputs = {write_graph("babai2.txt", babai_graph(2))};
  const RunRecord r = run(c);
  CHECK(r.result["max"] == 1);
  c.command = "conjecture";
  const RunRecord k = run(c);
  CHECK(k.result["graph_instance_holds"] == true);
  CHECK_FALSE(k.result.contains("counterexample"));
}

TEST_CASE("construct round trip") {
  ExperimentConfig c;
  c.command = "construct";
  c.kind = "extremal";
  c.n = 16;
  c.delta = 9;
  const RunRecord r = run(c);
  REQUIRE(r.text);
  CHECK(parse_edge_list(*r.text) == extremal_graph(16, 9).graph);
  c.kind = "gnp";
  c.n = 20;
  c.p = Rational(1, 3);
  c.seed = 4;
  CHECK(parse_edge_list(*run(c).text) == random_graph(20, Rational(1, 3), 4));
}

TEST_CASE("unknown command and bad inputs") {
  ExperimentConfig c;
  c.command = "nonsense";
  CHECK_THROWS_AS(run(c), InputError);
  c.command = "regeven";
  c.inputs = {(scratch() / "missing.txt").string()};
  CHECK_THROWS_AS(run(c), InputError);
}

TEST_CASE("ensemble output") {
  ExperimentConfig c;
  c.command = "ensemble";
  c.task = "regeven";
  c.n = 8;
  c.n_max = 10;
  c.count = 12;
  c.min_degree_ratio = Rational(1, 2);
  c.seed = 3;
  const std::string a = ensemble(c);
  CHECK(a == ensemble(c));
  CHECK(a.rfind(std::string(kEnsembleHeader) + "\n", 0) == 0);
  CHECK(count_lines(a) == 12 + 2);
  CHECK(a.find("\nsummary,") != std::string::npos);

  c.count = 0;
  CHECK(ensemble(c) == std::string(kEnsembleHeader) + "\n");

  c.count = 6;
  c.task = "tutte";
  c.n = 6;
  c.n_max = 7;
  const std::string t = ensemble(c);
  CHECK(t.find("disagree") == std::string::npos);

  c.task = "bogus";
  CHECK_THROWS_AS(ensemble(c), InputError);
}

TEST_CASE("ensemble rows do not depend on the worker count") {
  ExperimentConfig c;
  c.command = "ensemble";
  c.task = "conjecture";
  c.n = 6;
  c.n_max = 9;
  c.count = 10;
  c.min_degree_ratio = Rational(1, 2);
  ::setenv("HAMPACK_WORKERS", "1", 1);
  const std::string one = ensemble(c);
  ::setenv("HAMPACK_WORKERS", "4", 1);
  const std::string four = ensemble(c);
  ::unsetenv("HAMPACK_WORKERS");
  CHECK(one == four);
}

TEST_CASE("cli exit codes and determinism") {
  const fs::path dir = scratch();
  const std::string k5 = write_graph("k5.txt", reference_graph(5, ReferenceKind::complete));
  std::ofstream(dir / "broken.txt") << "p 3 1\n0 7\n";

  CHECK(cli("bounds --n 8 --delta 4", dir / "o1.json") == 0);
  CHECK(cli("regeven -i " + k5, dir / "o2.json") == 0);
  CHECK(slurp(dir / "o2.json").find("\"reg_even\": 4") != std::string::npos);
  CHECK(cli("regeven -i " + (dir / "broken.txt").string(), dir / "o3.json") == 2);
  CHECK(cli("maxpack -i " + write_graph("k13.txt", reference_graph(13, ReferenceKind::complete)),
            dir / "o4.json") == 3);
  CHECK(cli("bounds --n 8", dir / "o5.json") == 4);
  CHECK(cli("bounds --n 8 --delta 9", dir / "o6.json") == 4);

  const std::string gnp = "construct --kind gnp --n 30 --p 0.4 --seed 9";
  CHECK(cli(gnp, dir / "g1.txt") == 0);
  CHECK(cli(gnp, dir / "g2.txt") == 0);
  CHECK(slurp(dir / "g1.txt") == slurp(dir / "g2.txt"));

  const std::string g = (dir / "g1.txt").string();
  const std::string mc = "expander -i " + g + " --nu 0.05 --tau 0.3 --mc --samples 300 --seed 5";
  CHECK(cli(mc, dir / "m1.json") == 0);
  CHECK(cli(mc, dir / "m2.json") == 0);
  CHECK(slurp(dir / "m1.json") == slurp(dir / "m2.json"));
}
