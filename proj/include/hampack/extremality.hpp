#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hampack/expanders.hpp"
#include "hampack/graph.hpp"
#include "hampack/rational.hpp"

namespace hampack {

enum class SearchMode { exact, heuristic };
std::string to_string(SearchMode mode);

/// Outcome of testing a partition (A, B) against the four extremality
/// conditions, with α = δ/n - 1/2 and α₊ = max(α, 0).
///   E1: (1/2 - √(α₊/2) - η)n <= |A| <= (1/2 - √(α₊/2) + η)n
///   E2: (1/2 + √(α₊/2) - η)n <= |B| <= (1/2 + √(α₊/2) + η)n
///   E3: e(A,B) > (1-η)|A||B|
///   E4: e(B) < (α₊ + √(α₊/2) + η)n|B|/2
///   E5: n - |A∪B| <= 2ηn (implied by E1 and E2)
struct ExtremalityReport {
  int n = 0;
  int delta = 0;
  Rational eta;
  Rational alpha;
  Rational alpha_plus;
  std::optional<Partition> partition;
  bool e1 = false;
  bool e2 = false;
  bool e3 = false;
  bool e4 = false;
  bool e5 = false;
  bool extremal = false;
  SearchMode mode = SearchMode::exact;
  /// False for heuristic negatives, which prove nothing.
  bool definitive = true;
  /// η >= 1: the size windows contain every size.
  bool degenerate = false;

  int size_a = 0;
  int size_b = 0;
  std::int64_t e_ab = 0;
  std::int64_t e_b = 0;
  int uncovered = 0;
  /// Decimal renderings of the thresholds, for reports only.
  double a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0, e3_bound = 0, e4_bound = 0, e5_bound = 0;

  /// Local-search restarts performed (heuristic mode).
  int restarts = 0;
};

/// Evaluates E1-E5 exactly. Overlapping classes raise InputError.
ExtremalityReport check_eta_extremal_pair(const Graph& g, const Rational& eta,
                                          const Partition& part);

inline constexpr int kExactExtremalLimit = 14;
inline constexpr int kDefaultRestarts = 20;

struct WitnessSearchOptions {
  /// Unset: exact when n <= 14, heuristic otherwise.
  std::optional<SearchMode> mode;
  std::uint64_t seed = 1;
  int restarts = kDefaultRestarts;
};

/// Exact mode enumerates every disjoint (A, B) (n <= 14, else CapacityError)
/// and returns the first satisfying pair in (mask A, mask B) order, or a
/// definitive negative. Heuristic mode runs a seeded local search and never
/// claims a negative.
ExtremalityReport find_eta_extremal_witness(const Graph& g, const Rational& eta,
                                            const WitnessSearchOptions& options = {});

/// d_B(v) audit for vertices of B:
///   (i)  d_B(v) >= (α + √(α₊/2) - 3η)n
///   (ii) d_B(v) <= (α + √(α₊/2) + 2√η)n for all but at most 2√η n of them.
struct AlmostRegularAudit {
  Rational eta;
  Rational alpha;
  /// (vertex, d_B(vertex)) pairs in vertex order.
  std::vector<std::pair<int, int>> below_lower;
  std::vector<std::pair<int, int>> above_upper;
  /// |above_upper| <= 2√η n.
  bool count_within_limit = true;
  double lower_bound = 0;
  double upper_bound = 0;
  double count_limit = 0;

  bool clean() const noexcept { return below_lower.empty() && count_within_limit; }
};

AlmostRegularAudit almost_regular_audit(const Graph& g, const Partition& part,
                                        const Rational& eta);

/// Deletes edges xy inside `a` while both d(x), d(y) exceed the original
/// δ(g), scanning edges lexicographically until no such edge is left.
Graph greedy_sparsify(const Graph& g, const VertexSet& a);

enum class ClosenessKind { bipartite, two_cliques };
std::string to_string(ClosenessKind kind);
/// Accepts "bipartite", "two_cliques", "two-cliques" and "cliques".
ClosenessKind parse_closeness_kind(std::string_view name);

/// Minimum of e(A) (bipartite) or e(A, V∖A) (two cliques) over |A| = ⌊n/2⌋.
struct ClosenessReport {
  ClosenessKind kind = ClosenessKind::bipartite;
  Rational epsilon;
  VertexSet a;
  std::int64_t score = 0;
  /// score <= εn²
  bool close = false;
  SearchMode mode = SearchMode::exact;
  /// Heuristic scores are upper bounds on the true minimum.
  bool upper_bound_only = false;
  Rational threshold;
};

inline constexpr int kExactClosenessLimit = 24;

/// Score of a fixed A.
std::int64_t closeness_score(const Graph& g, ClosenessKind kind, const VertexSet& a);

ClosenessReport closeness(const Graph& g, ClosenessKind kind, const Rational& epsilon,
                          const WitnessSearchOptions& options = {});

enum class TrichotomyLabel {
  close_bipartite,
  close_cliques,
  robust_expander,
  hypothesis_violated,
  unclassified
};
std::string to_string(TrichotomyLabel label);

struct TrichotomyReport {
  TrichotomyLabel label = TrichotomyLabel::unclassified;
  int delta = 0;
  std::optional<ClosenessReport> bipartite;
  std::optional<ClosenessReport> cliques;
  std::optional<ExpanderVerdict> expansion;
};

/// Requires κ <= ν <= τ (DomainError otherwise). Reports
/// hypothesis_violated when δ < (1/2 - κ)n; otherwise tries bipartite
/// closeness, two-clique closeness and robust (ν,τ)-expansion in that order.
/// Expansion is exact for n <= 22; above that Monte-Carlo can only refute,
/// so the result is unclassified unless a closeness test succeeds.
TrichotomyReport trichotomy_classify(const Graph& g, const Rational& kappa, const Rational& nu,
                                     const Rational& tau, const Rational& epsilon,
                                     std::uint64_t seed = 1,
                                     std::int64_t mc_samples = kDefaultMcSamples);

}  // namespace hampack
