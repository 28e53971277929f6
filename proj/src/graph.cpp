#include "hampack/graph.hpp"

#include <algorithm>
#include <string>

#include "hampack/errors.hpp"

namespace hampack {

namespace {

void check_order(int n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxVertices));
  }
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {
  check_order(n);
}

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int n, std::span<const int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (n % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(int n, std::uint64_t mask) {
  if (n > 64) throw CapacityError("from_mask requires at most 64 vertices");
  VertexSet s(n);
  if (n > 0) s.words_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (o.n_ != n_) throw InputError("vertex sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.n_ != n_) throw InputError("vertex sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  if (o.n_ != n_) throw InputError("vertex sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

int VertexSet::intersection_size(const VertexSet& o) const noexcept {
  int c = 0;
  const std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

bool VertexSet::intersects(const VertexSet& o) const noexcept {
  const std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const noexcept {
  if (o.n_ != n_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].contains(v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) {
    throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!adj_[u].contains(v)) {
    throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) + " not present");
  }
  adj_[u].erase(v);
  adj_[v].erase(u);
  --m_;
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return adj_[v].size();
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = v == 0 ? adj_[v].size() : std::min(best, adj_[v].size());
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, adj_[v].size());
  return best;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[v] = adj_[v].size();
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::uint64_t Graph::row_mask(int v) const {
  if (n_ > 64) throw CapacityError("row_mask requires at most 64 vertices");
  check_vertex(v);
  return adj_[v].mask();
}

// ------------------------------------------------------------------ DiGraph

DiGraph::DiGraph(int n) : n_(n) {
  check_order(n);
  out_.assign(static_cast<std::size_t>(n), VertexSet(n));
  in_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void DiGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

bool DiGraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return out_[u].contains(v);
}

void DiGraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  if (out_[u].contains(v)) {
    throw InputError("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
  }
  out_[u].insert(v);
  in_[v].insert(u);
  ++arcs_;
}

const VertexSet& DiGraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const VertexSet& DiGraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

int DiGraph::out_degree(int v) const { return out_neighbors(v).size(); }
int DiGraph::in_degree(int v) const { return in_neighbors(v).size(); }

int DiGraph::min_out_degree() const {
  int best = n_ == 0 ? 0 : out_[0].size();
  for (int v = 1; v < n_; ++v) best = std::min(best, out_[v].size());
  return best;
}

int DiGraph::min_in_degree() const {
  int best = n_ == 0 ? 0 : in_[0].size();
  for (int v = 1; v < n_; ++v) best = std::min(best, in_[v].size());
  return best;
}

std::vector<std::pair<int, int>> DiGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(arcs_));
  for (int u = 0; u < n_; ++u) out_[u].for_each([&](int v) { out.emplace_back(u, v); });
  return out;
}

// --------------------------------------------------------- EdgeSubgraphMask

EdgeSubgraphMask::EdgeSubgraphMask(int host_n) : host_n_(host_n) { check_order(host_n); }

EdgeSubgraphMask::EdgeSubgraphMask(int host_n, std::vector<Edge> edges)
    : host_n_(host_n), edges_(std::move(edges)) {
  check_order(host_n);
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InputError("loop in edge mask");
    if (e.u < 0 || e.v >= host_n_) throw InputError("edge mask endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge in edge mask");
  }
}

bool EdgeSubgraphMask::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> EdgeSubgraphMask::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(host_n_), 0);
  for (const Edge& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

Graph EdgeSubgraphMask::to_graph() const { return Graph(host_n_, edges_); }

// ------------------------------------------------------------- operations

int degree(const Graph& g, int v) { return g.degree(v); }

std::int64_t ordered_pairs(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.universe() != g.order() || y.universe() != g.order()) {
    throw InputError("vertex set universe does not match the graph");
  }
  std::int64_t total = 0;
  x.for_each([&](int u) { total += g.neighbors(u).intersection_size(y); });
  return total;
}

std::int64_t edges_within(const Graph& g, const VertexSet& x) { return ordered_pairs(g, x, x) / 2; }

std::int64_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  // e'(X,Y) = e(X,Y) + e(X∩Y)
  return ordered_pairs(g, x, y) - edges_within(g, x & y);
}

Graph remove_subgraph(const Graph& g, const EdgeSubgraphMask& h) {
  if (h.host_order() != g.order()) throw InputError("mask host order differs from graph order");
  Graph out = g;
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("mask edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " is not an edge of the host");
    }
    out.remove_edge(e.u, e.v);
  }
  return out;
}

EdgeSubgraphMask union_edge_disjoint(const EdgeSubgraphMask& h1, const EdgeSubgraphMask& h2) {
  if (h1.host_order() != h2.host_order()) throw InputError("masks over different hosts");
  std::vector<Edge> merged;
  merged.reserve(h1.size() + h2.size());
  std::merge(h1.edges().begin(), h1.edges().end(), h2.edges().begin(), h2.edges().end(),
             std::back_inserter(merged));
  if (auto it = std::adjacent_find(merged.begin(), merged.end()); it != merged.end()) {
    throw DisjointnessError("edge " + std::to_string(it->u) + " " + std::to_string(it->v) +
                            " appears in both masks");
  }
  return EdgeSubgraphMask(h1.host_order(), std::move(merged));
}

EdgeSubgraphMask mask_of(const Graph& g) { return EdgeSubgraphMask(g.order(), g.edges()); }

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (!unseen.contains(s)) continue;
    VertexSet comp(g.order());
    unseen.erase(s);
    comp.insert(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet fresh = g.neighbors(u) & unseen;
      fresh.for_each([&](int w) {
        unseen.erase(w);
        comp.insert(w);
        stack.push_back(w);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace hampack
