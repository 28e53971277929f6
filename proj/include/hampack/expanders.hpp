#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hampack/factors.hpp"
#include "hampack/graph.hpp"
#include "hampack/rational.hpp"

namespace hampack {

/// Expansion parameters, 0 < nu <= tau < 1.
struct RobustParams {
  Rational nu;
  Rational tau;

  RobustParams() = default;
  /// Throws DomainError unless 0 < nu <= tau < 1.
  RobustParams(Rational nu_, Rational tau_);
};

enum class CheckMode { exact, monte_carlo };
enum class ExpansionStatus {
  certified,    ///< every S in the window expands (exact mode only)
  refuted,      ///< witness holds a non-expanding S
  inconclusive  ///< Monte-Carlo search found no witness
};

std::string to_string(CheckMode mode);
std::string to_string(ExpansionStatus status);

struct ExpanderVerdict {
  ExpansionStatus status = ExpansionStatus::inconclusive;
  std::optional<VertexSet> witness;
  CheckMode mode = CheckMode::exact;
  /// Random subsets drawn (Monte-Carlo only).
  std::int64_t samples = 0;
  /// Structured candidates examined (Monte-Carlo only).
  std::int64_t structured = 0;

  bool certified() const noexcept { return status == ExpansionStatus::certified; }
  bool refuted() const noexcept { return status == ExpansionStatus::refuted; }
};

/// Integer form of the window τn <= |S| <= (1-τ)n; empty when lo > hi.
struct SizeWindow {
  int lo = 0;
  int hi = -1;
  bool contains(int k) const noexcept { return lo <= k && k <= hi; }
};
SizeWindow size_window(int n, const Rational& tau);

/// RN_ν(S): vertices with at least νn neighbours in S.
VertexSet robust_neighborhood(const Graph& g, const VertexSet& s, const Rational& nu);

/// True if S lies in the size window and |RN_ν(S)| < |S| + νn, evaluated
/// directly from the definition with rational arithmetic.
bool violates_expansion(const Graph& g, const VertexSet& s, const RobustParams& p);

/// Exhaustive check over every S in the window (n <= 22). A refutation
/// carries the lexicographically first (as a sorted vertex list) witness.
ExpanderVerdict is_robust_expander_exact(const Graph& g, const RobustParams& p);

/// Structured candidates (components, neighbourhoods, degree-ordered
/// prefixes, BFS balls and their complements), then `samples` random S with
/// uniform size in the window. Never certifies.
ExpanderVerdict refute_robust_expander_mc(const Graph& g, const RobustParams& p,
                                          std::int64_t samples, std::uint64_t seed);

/// nu = eps * tau / 2, the largest nu with eps >= 2 nu / tau.
RobustParams min_degree_implies_expander_params(const Rational& eps, const Rational& tau);

/// Orientation with |d+(v) - d-(v)| <= 1 everywhere and equality of in- and
/// out-degree at even-degree vertices.
DiGraph eulerian_orientation(const Graph& g);

/// RN+_ν(S): vertices with at least νn in-neighbours in S.
VertexSet robust_out_neighborhood(const DiGraph& d, const VertexSet& s, const Rational& nu);
bool violates_out_expansion(const DiGraph& d, const VertexSet& s, const RobustParams& p);
ExpanderVerdict is_robust_outexpander_exact(const DiGraph& d, const RobustParams& p);

struct SparseFactorResult {
  Factor factor;
  ExpanderVerdict verdict;
  int attempts_used = 0;
  /// Verdict is certified (exact) or unrefuted (Monte-Carlo).
  bool accepted = false;
};

inline constexpr int kDefaultFactorAttempts = 50;
inline constexpr std::int64_t kDefaultMcSamples = 1000;

/// Randomised extract-and-verify search for an εn-factor that is a robust
/// expander. Requires εn to be an even integer >= 2 and g to have such a
/// factor (ExistenceError otherwise).
SparseFactorResult sparse_expander_factor(const Graph& g, const Rational& eps,
                                          const RobustParams& target, std::uint64_t seed,
                                          int attempts = kDefaultFactorAttempts);

}  // namespace hampack
