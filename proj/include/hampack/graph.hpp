#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hampack {

/// Largest vertex count any Graph or DiGraph may have.
inline constexpr int kMaxVertices = 1024;

/// Subset of {0, ..., n-1} stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n);
  VertexSet(int n, std::initializer_list<int> members);
  VertexSet(int n, std::span<const int> members);

  /// All of {0, ..., n-1}.
  static VertexSet full(int n);
  /// Set whose bits are the low n bits of `mask`; requires n <= 64.
  static VertexSet from_mask(int n, std::uint64_t mask);

  int universe() const noexcept { return n_; }
  bool contains(int v) const noexcept {
    return v >= 0 && v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v);
  void erase(int v);
  int size() const noexcept;
  bool empty() const noexcept;

  VertexSet complement() const;
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  /// Removes every member of `o`.
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& o) const = default;

  /// |this ∩ o| without materialising the intersection.
  int intersection_size(const VertexSet& o) const noexcept;
  bool intersects(const VertexSet& o) const noexcept;
  bool is_subset_of(const VertexSet& o) const noexcept;

  /// Members in ascending order.
  std::vector<int> members() const;
  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Unordered vertex pair, normalised so that u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  /// Number of edges.
  std::int64_t size() const noexcept { return m_; }

  bool has_edge(int u, int v) const;
  /// Adds uv; loops and duplicates raise InputError.
  void add_edge(int u, int v);
  /// Removes uv; a missing edge raises InputError.
  void remove_edge(int u, int v);

  const VertexSet& neighbors(int v) const;
  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degrees() const;

  /// Edge list sorted lexicographically.
  std::vector<Edge> edges() const;
  /// Adjacency row as a 64-bit mask; requires order() <= 64.
  std::uint64_t row_mask(int v) const;
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool operator==(const Graph& o) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Directed graph without loops; an antiparallel pair u->v, v->u is allowed.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(int n);

  int order() const noexcept { return n_; }
  std::int64_t arc_count() const noexcept { return arcs_; }
  bool has_arc(int u, int v) const;
  void add_arc(int u, int v);
  const VertexSet& out_neighbors(int v) const;
  const VertexSet& in_neighbors(int v) const;
  int out_degree(int v) const;
  int in_degree(int v) const;
  int min_out_degree() const;
  int min_in_degree() const;
  /// Arcs (u, v) sorted lexicographically.
  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const DiGraph& o) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::int64_t arcs_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Explicit edge set over a host vertex count. Stored sorted and unique.
class EdgeSubgraphMask {
 public:
  EdgeSubgraphMask() = default;
  explicit EdgeSubgraphMask(int host_n);
  EdgeSubgraphMask(int host_n, std::vector<Edge> edges);

  int host_order() const noexcept { return host_n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(const Edge& e) const;
  std::vector<int> degrees() const;
  Graph to_graph() const;

  bool operator==(const EdgeSubgraphMask& o) const = default;

 private:
  int host_n_ = 0;
  std::vector<Edge> edges_;
};

/// Disjoint vertex classes (A, B); vertices in neither are allowed.
struct Partition {
  VertexSet a;
  VertexSet b;
};

/// d_G(v), with a range check.
int degree(const Graph& g, int v);

/// Number of edges with one endpoint in x and the other in y. An edge with
/// both endpoints in x ∩ y is counted once.
std::int64_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Number of ordered pairs (u, v) with u in x, v in y and uv an edge.
std::int64_t ordered_pairs(const Graph& g, const VertexSet& x, const VertexSet& y);

/// e(G[x]).
std::int64_t edges_within(const Graph& g, const VertexSet& x);

/// G - H. Every edge of h must be present in g.
Graph remove_subgraph(const Graph& g, const EdgeSubgraphMask& h);

/// H + H' for edge-disjoint masks on the same host.
EdgeSubgraphMask union_edge_disjoint(const EdgeSubgraphMask& h1, const EdgeSubgraphMask& h2);

/// Mask holding every edge of g.
EdgeSubgraphMask mask_of(const Graph& g);

/// Vertex sets of the connected components of g[within], ordered by their
/// smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

}  // namespace hampack
