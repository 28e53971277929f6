#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hampack/expanders.hpp"
#include "hampack/extremality.hpp"
#include "hampack/hamilton.hpp"
#include "hampack/rational.hpp"

namespace hampack {

inline constexpr const char* kVersion = "1.0.0";

/// Everything a command can consume. Unset optionals fall back to the
/// per-command defaults documented in the README; those defaults are
/// illustrative, not derived from any asymptotic hypothesis.
struct ExperimentConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<int> n;
  std::optional<int> delta;
  std::optional<int> m;
  std::optional<int> r;
  std::optional<int> target;
  std::optional<Rational> p;
  std::optional<Rational> eta;
  std::optional<Rational> epsilon;
  std::optional<Rational> nu;
  std::optional<Rational> tau;
  std::optional<Rational> kappa;
  std::optional<std::string> kind;
  /// "exact", "heuristic" or "mc"; unset picks by size.
  std::optional<std::string> mode;
  std::int64_t budget = kDefaultPackBudget;
  std::int64_t samples = kDefaultMcSamples;
  int restarts = kDefaultRestarts;
  int attempts = kDefaultFactorAttempts;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  bool directed = false;
  /// Side output (factor edge list, orientation arc list).
  std::optional<std::string> emit;

  // ensemble only
  std::string task;
  int count = 0;
  std::optional<int> n_max;
  /// Keep only graphs with δ >= min_degree_ratio * n.
  std::optional<Rational> min_degree_ratio;
};

struct RunRecord {
  nlohmann::json config;
  std::string version = kVersion;
  double wall_seconds = 0.0;
  /// "exact", "heuristic" or "monte_carlo".
  std::string provenance = "exact";
  nlohmann::json result;
  /// Raw text output replacing JSON (construct, orient).
  std::optional<std::string> text;
};

RunRecord run(const ExperimentConfig& config);

/// Record as JSON; wall time is left out unless `timing` is set so that
/// repeated runs stay byte-identical.
nlohmann::json to_json(const RunRecord& record, bool timing);

/// Fixed header of every ensemble CSV.
inline constexpr const char* kEnsembleHeader = "row,seed,n,edges,min_degree,value,status,error";

/// Runs `config.count` seeded instances of `config.task` (expander, regeven,
/// conjecture, tutte) on a worker pool and returns the CSV text: one row per
/// instance in row order, then a summary row when count > 0. Worker count
/// comes from HAMPACK_WORKERS, else the hardware concurrency.
std::string ensemble(const ExperimentConfig& config);

int default_worker_count();

/// Sorted member list as a JSON array.
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const ExtremalityReport& r);
nlohmann::json to_json(const ClosenessReport& r);
nlohmann::json to_json(const ExpanderVerdict& v);
nlohmann::json to_json(const Packing& p, const Graph& host, bool exact);

}  // namespace hampack
