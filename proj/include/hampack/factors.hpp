#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hampack/graph.hpp"
#include "hampack/rational.hpp"

namespace hampack {

class Rng;

/// Spanning r-regular subgraph of a host graph.
struct Factor {
  EdgeSubgraphMask mask;
  int r = 0;
};

/// Disjoint (S, T) together with the Tutte quantities
///   q_r = #components C of G-(S∪T) with r|C| + e(C,T) odd,
///   r_r = Σ_{v∈T} d(v) - e(S,T) + r(|S| - |T|).
/// G has an r-factor iff q_r <= r_r for every disjoint pair.
struct TutteCertificate {
  VertexSet s;
  VertexSet t;
  std::int64_t q_r = 0;
  std::int64_t r_r = 0;
  bool violated() const noexcept { return q_r > r_r; }
};

struct FactorDecision {
  bool exists = false;
  std::optional<Factor> factor;
  /// Present when exists == false; always violated().
  std::optional<TutteCertificate> certificate;
  /// Set when rejection was decided by the parity of r*n alone.
  bool parity_rejected = false;
};

TutteCertificate tutte_quantities(const Graph& g, int r, const VertexSet& s, const VertexSet& t);

/// Decides r-factor existence through the stub/core gadget and a maximum
/// matching; negative answers carry a violating TutteCertificate.
FactorDecision r_factor_exists(const Graph& g, int r);

/// Exhaustive Q_r <= R_r check over all 3^n disjoint pairs; n <= 14.
bool tutte_verify_exhaustive(const Graph& g, int r);
/// Same enumeration, returning the first violating pair if any.
std::optional<TutteCertificate> tutte_find_violation(const Graph& g, int r);

/// Explicit r-factor. Throws ExistenceError (carrying the certificate in
/// its message) when none exists.
Factor extract_r_factor(const Graph& g, int r);

/// Gadget extraction only, with an optional randomised matching order.
/// Returns nullopt when no r-factor exists.
std::optional<Factor> find_r_factor(const Graph& g, int r, Rng* rng = nullptr);

struct RegEvenResult {
  int degree = 0;
  /// Witness of maximal even degree (empty factor when degree == 0).
  Factor factor;
};

/// Largest even r such that g has an r-factor, searched downward from the
/// largest even value <= δ(g).
RegEvenResult reg_even_of_graph(const Graph& g);

/// Bracket for reg_even(n, delta).
///   lower: largest even integer strictly below (δ + sqrt(n(2δ-n)+8))/2
///   upper: (δ + sqrt(n(2δ-n)))/2 + 4/(sqrt(n(2δ-n)) + 4)
struct RegEvenBounds {
  int n = 0;
  int delta = 0;
  int lower = 0;
  double upper = 0.0;
  /// The raw lower expression was itself an even integer, so the slack is 2.
  bool lower_boundary = false;
  /// delta < n/2: both ends are 0.
  bool below_half = false;
  std::string note;

  /// Exact test of k <= upper.
  bool admits(std::int64_t k) const;
};

RegEvenBounds regeven_bounds(int n, int delta);

/// Splits a 2k-regular graph into k edge-disjoint 2-factors: balanced
/// Eulerian orientation, then k perfect matchings of the out/in bipartite
/// double cover.
std::vector<Factor> petersen_two_factorization(const Graph& g);

/// n/4 + (α+ε)n/2 + n sqrt((α+ε)/2) and the largest even integer not above it.
struct EvenTargetDegree {
  std::int64_t even_floor = 0;
  /// value = rational_part + n * sqrt(radicand)
  Rational rational_part;
  Rational radicand;
  double approx = 0.0;
};

EvenTargetDegree target_factor_degree(int n, const Rational& alpha, const Rational& eps);

/// Every vertex has degree r in the mask and every mask edge lies in g.
bool audit_factor(const Graph& g, const Factor& f);

}  // namespace hampack
