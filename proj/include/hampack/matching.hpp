#pragma once

#include <span>
#include <vector>

#include "hampack/graph.hpp"

namespace hampack {

/// Adjacency-list graph without the bitset vertex limit. The r-factor gadget
/// and the bipartite peel in the 2-factorisation run on this type.
class SparseGraph {
 public:
  SparseGraph() = default;
  explicit SparseGraph(int n) : adj_(static_cast<std::size_t>(n)) {}
  explicit SparseGraph(const Graph& g);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

 private:
  std::vector<std::vector<int>> adj_;
};

/// Set of vertex-disjoint edges.
struct Matching {
  std::vector<Edge> pairs;
  std::size_t size() const noexcept { return pairs.size(); }
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm). Returns
/// mate[v], or -1 for exposed vertices. `order`, when non-empty, is the
/// permutation in which vertices are offered to the greedy start and to the
/// augmenting searches.
std::vector<int> maximum_matching(const SparseGraph& g, std::span<const int> order = {});

/// Maximum matching of a bitset graph.
Matching max_matching(const Graph& g);

/// Gallai-Edmonds classes.
enum class GallaiClass {
  deficient,  ///< D: missed by some maximum matching
  barrier,    ///< A: neighbours of D outside D
  covered     ///< C: everything else
};

/// Decomposition relative to a maximum matching `mate` of g.
std::vector<GallaiClass> gallai_edmonds(const SparseGraph& g, const std::vector<int>& mate);

}  // namespace hampack
