#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hampack/factors.hpp"
#include "hampack/graph.hpp"

namespace hampack {

/// Hamilton cycle as a vertex order. Canonical form starts at 0 and has
/// order[1] < order[n-1].
struct HamCycle {
  std::vector<int> order;

  std::vector<Edge> edges() const;
  bool operator==(const HamCycle&) const = default;
  auto operator<=>(const HamCycle&) const = default;
};

/// Rotates and reflects a cyclic order into canonical form.
HamCycle canonical_cycle(std::vector<int> order);

struct Packing {
  std::vector<HamCycle> cycles;
  /// Reached the requested number of cycles.
  bool complete = false;
  /// The node budget ran out before the search finished.
  bool budget_exhausted = false;
  /// Node expansions spent.
  std::int64_t nodes = 0;
};

inline constexpr int kHamiltonDpLimit = 20;
inline constexpr int kHamiltonLimit = 64;
inline constexpr int kMaxPackingExactLimit = 12;
/// Node budget used when a caller does not supply one; <= 0 means unlimited.
inline constexpr std::int64_t kDefaultPackBudget = 50'000'000;

/// Exact: subset DP for n <= 20, pruned backtracking for n <= 64, and
/// CapacityError above. Graphs with fewer than 3 vertices have none.
std::optional<HamCycle> find_hamilton(const Graph& g);

/// Calls `visit` on every Hamilton cycle of g in increasing canonical order
/// until it returns false. n <= 64.
void for_each_hamilton_cycle(const Graph& g, const std::function<bool(const HamCycle&)>& visit);

/// Searches for `target` edge-disjoint Hamilton cycles, listed in increasing
/// canonical order, backtracking across earlier cycles. When the target is
/// missed, `cycles` holds the longest sequence met. budget <= 0: unlimited.
Packing pack_hamilton(const Graph& g, int target, std::int64_t budget = kDefaultPackBudget);

struct MaxPacking {
  int max = 0;
  Packing packing;
  /// min(⌊δ/2⌋, reg_even/2), the starting target.
  int upper_bound = 0;
};

/// Maximum number of edge-disjoint Hamilton cycles, n <= 12.
MaxPacking max_packing_exact(const Graph& g);

/// Hamilton decomposition of an even-regular graph. Irregular or odd-regular
/// input raises DomainError. For n <= 12 the search is unlimited, so an
/// incomplete result is a proof that none exists; above that the default
/// budget applies.
Packing decompose_even_regular(const Graph& g, std::int64_t budget = 0);

struct ConjectureReport {
  int n = 0;
  int delta = 0;
  int reg_even = 0;
  RegEvenBounds bounds;
  MaxPacking packing;
  /// packing >= reg_even(G)/2
  bool graph_instance_holds = false;
  /// packing >= lower/2
  bool bound_instance_holds = false;
  bool verified = false;
};

/// Requires δ >= n/2 (DomainError) and n <= 12 (CapacityError).
ConjectureReport conjecture_experiment(const Graph& g);

struct PackingAudit {
  bool ok = true;
  std::string message;
};

/// Re-checks every cycle against g and pairwise edge-disjointness from raw
/// edge sets; independent of the search code.
PackingAudit verify_packing(const Graph& g, const Packing& p);

}  // namespace hampack
