#include "hampack/matching.hpp"

#include <numeric>

#include "hampack/errors.hpp"

namespace hampack {

SparseGraph::SparseGraph(const Graph& g) : adj_(static_cast<std::size_t>(g.order())) {
  for (const Edge& e : g.edges()) add_edge(e.u, e.v);
}

namespace {

// Alternating-tree search from one exposed root with blossom shrinking.
// Per-search state is reset only on the vertices the previous search touched.
class BlossomSearch {
 public:
  BlossomSearch(const SparseGraph& g, std::vector<int>& mate)
      : g_(g),
        mate_(mate),
        parent_(static_cast<std::size_t>(g.order()), -1),
        base_(static_cast<std::size_t>(g.order())),
        outer_(static_cast<std::size_t>(g.order()), 0),
        in_blossom_(static_cast<std::size_t>(g.order()), 0),
        lca_mark_(static_cast<std::size_t>(g.order()), 0),
        touch_mark_(static_cast<std::size_t>(g.order()), 0) {
    std::iota(base_.begin(), base_.end(), 0);
  }

  /// Endpoint of an augmenting path from root, or -1.
  int grow(int root) {
    reset();
    touch(root);
    outer_[root] = 1;
    queue_.assign(1, root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int v = queue_[head];
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          shrink(v, to);
        } else if (parent_[to] == -1) {
          touch(to);
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          const int next = mate_[to];
          touch(next);
          outer_[next] = 1;
          queue_.push_back(next);
        }
      }
    }
    return -1;
  }

  void augment(int end) {
    int v = end;
    while (v != -1) {
      const int pv = parent_[v];
      const int ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  /// Calls f(v) for every outer (even) vertex of the last search.
  template <class F>
  void for_each_outer(F&& f) const {
    for (int v : touched_) {
      if (outer_[v]) f(v);
    }
  }

 private:
  void touch(int v) {
    if (touch_mark_[v] != round_) {
      touch_mark_[v] = round_;
      touched_.push_back(v);
    }
  }

  void reset() {
    for (int v : touched_) {
      parent_[v] = -1;
      base_[v] = v;
      outer_[v] = 0;
      in_blossom_[v] = 0;
    }
    touched_.clear();
    ++round_;
  }

  int lca(int a, int b) {
    ++lca_round_;
    while (true) {
      a = base_[a];
      lca_mark_[a] = lca_round_;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b] == lca_round_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void shrink(int v, int to) {
    const int cur = lca(v, to);
    for (int t : touched_) in_blossom_[t] = 0;
    mark_path(v, cur, to);
    mark_path(to, cur, v);
    const std::size_t count = touched_.size();
    for (std::size_t i = 0; i < count; ++i) {
      const int u = touched_[i];
      if (in_blossom_[base_[u]]) {
        base_[u] = cur;
        if (!outer_[u]) {
          outer_[u] = 1;
          queue_.push_back(u);
        }
      }
    }
  }

  const SparseGraph& g_;
  std::vector<int>& mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> outer_;
  std::vector<char> in_blossom_;
  std::vector<unsigned> lca_mark_;
  std::vector<unsigned> touch_mark_;
  std::vector<int> touched_;
  std::vector<int> queue_;
  unsigned round_ = 1;
  unsigned lca_round_ = 0;
};

std::vector<int> identity_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

std::vector<int> maximum_matching(const SparseGraph& g, std::span<const int> order) {
  const int n = g.order();
  std::vector<int> fallback;
  if (order.empty()) {
    fallback = identity_order(n);
    order = fallback;
  }
  if (static_cast<int>(order.size()) != n) throw InputError("matching order has the wrong length");
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  for (int v : order) {
    if (mate[v] != -1) continue;
    for (int w : g.neighbors(v)) {
      if (mate[w] == -1) {
        mate[v] = w;
        mate[w] = v;
        break;
      }
    }
  }
  // A root with no augmenting path keeps none after later augmentations, so
  // one pass over the exposed vertices suffices.
  BlossomSearch search(g, mate);
  for (int v : order) {
    if (mate[v] != -1) continue;
    const int end = search.grow(v);
    if (end != -1) search.augment(end);
  }
  return mate;
}

Matching max_matching(const Graph& g) {
  SparseGraph sg(g);
  auto mate = maximum_matching(sg);
  Matching m;
  for (int v = 0; v < g.order(); ++v) {
    if (mate[v] > v) m.pairs.emplace_back(v, mate[v]);
  }
  return m;
}

std::vector<GallaiClass> gallai_edmonds(const SparseGraph& g, const std::vector<int>& mate) {
  const int n = g.order();
  std::vector<int> work = mate;
  std::vector<char> deficient(static_cast<std::size_t>(n), 0);
  BlossomSearch search(g, work);
  for (int v = 0; v < n; ++v) {
    if (work[v] != -1) continue;
    if (search.grow(v) != -1) throw InputError("gallai_edmonds needs a maximum matching");
    search.for_each_outer([&](int u) { deficient[u] = 1; });
  }
  std::vector<GallaiClass> cls(static_cast<std::size_t>(n), GallaiClass::covered);
  for (int v = 0; v < n; ++v) {
    if (deficient[v]) {
      cls[v] = GallaiClass::deficient;
      continue;
    }
    for (int w : g.neighbors(v)) {
      if (deficient[w]) {
        cls[v] = GallaiClass::barrier;
        break;
      }
    }
  }
  return cls;
}

}  // namespace hampack
