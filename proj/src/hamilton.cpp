#include "hampack/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "hampack/errors.hpp"

namespace hampack {

std::vector<Edge> HamCycle::edges() const {
  std::vector<Edge> out;
  const std::size_t n = order.size();
  if (n < 3) return out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(order[i], order[(i + 1) % n]);
  std::sort(out.begin(), out.end());
  return out;
}

HamCycle canonical_cycle(std::vector<int> order) {
  if (order.empty()) return {};
  auto lowest = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), lowest, order.end());
  if (order.size() > 2 && order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  return HamCycle{std::move(order)};
}

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
/// Bits v, v+1, ..., 63.
std::uint64_t from_bit(int v) { return v >= 64 ? 0 : ~(bit(v) - 1); }

std::vector<std::uint64_t> rows_of(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row_mask(v);
  return rows;
}

/// Connected with no cut vertex. Hamiltonian graphs always are, and the
/// check is cheap next to the search it can skip.
bool biconnected(int n, const std::vector<std::uint64_t>& rows) {
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int clock = 0;
  bool cut = false;
  auto dfs = [&](auto&& self, int v, int parent) -> void {
    disc[v] = low[v] = clock++;
    int children = 0;
    for (std::uint64_t c = rows[v]; c && !cut; c &= c - 1) {
      const int w = std::countr_zero(c);
      if (disc[w] < 0) {
        ++children;
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent >= 0 && low[w] >= disc[v]) cut = true;
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(dfs, 0, -1);
  return !cut && clock == n;
}

/// Depth-first enumeration of Hamilton cycles through 0 in increasing
/// canonical order over residual adjacency rows (n <= 64). `rows` may be
/// modified by the visitor as long as it is restored before returning.
class CycleSearch {
 public:
  using Visitor = std::function<bool(const std::vector<int>&)>;

  CycleSearch(int n, const std::vector<std::uint64_t>& rows, std::int64_t& nodes,
              std::int64_t budget)
      : n_(n), rows_(rows), nodes_(nodes), budget_(budget), path_(static_cast<std::size_t>(n)) {}

  /// Cycles whose second vertex is >= min_second (exactly `forced` when
  /// forced >= 0). Returns true when the visitor asked to stop or the budget
  /// ran out.
  bool run(int min_second, int forced, const Visitor& visit) {
    if (n_ < 3 || !biconnected(n_, rows_)) return false;
    visit_ = &visit;
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
    path_[0] = 0;
    for (std::uint64_t c = rows_[0]; c; c &= c - 1) {
      const int v1 = std::countr_zero(c);
      if (v1 < min_second || (forced >= 0 && v1 != forced)) continue;
      if ((rows_[0] & from_bit(v1 + 1)) == 0) break;
      first_ = v1;
      path_[1] = v1;
      if (extend(v1, 2, all & ~bit(0) & ~bit(v1))) return true;
    }
    return false;
  }

  bool exhausted() const { return exhausted_; }

 private:
  bool extend(int cur, int depth, std::uint64_t unvisited) {
    ++nodes_;
    if (budget_ > 0 && nodes_ > budget_) {
      exhausted_ = true;
      return true;
    }
    if (unvisited == 0) {
      if ((rows_[cur] & 1U) && cur > first_) return (*visit_)(path_);
      return false;
    }
    // the closing vertex must be a neighbour of 0 above the second vertex
    if ((rows_[0] & unvisited & from_bit(first_ + 1)) == 0) return false;
    const std::uint64_t open = unvisited | bit(cur) | 1U;
    for (std::uint64_t u = unvisited; u; u &= u - 1) {
      const int w = std::countr_zero(u);
      if (std::popcount(rows_[w] & open) < 2) return false;
    }
    // unvisited ∪ {cur} has to be connected
    std::uint64_t reach = bit(cur);
    std::uint64_t frontier = reach;
    const std::uint64_t region = unvisited | bit(cur);
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(f)];
      next &= region & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != region) return false;

    for (std::uint64_t c = rows_[cur] & unvisited; c; c &= c - 1) {
      const int w = std::countr_zero(c);
      path_[depth] = w;
      if (extend(w, depth + 1, unvisited & ~bit(w))) return true;
    }
    return false;
  }

  int n_;
  const std::vector<std::uint64_t>& rows_;
  std::int64_t& nodes_;
  std::int64_t budget_;
  std::vector<int> path_;
  int first_ = 0;
  bool exhausted_ = false;
  const Visitor* visit_ = nullptr;
};

std::optional<HamCycle> hamilton_dp(const Graph& g) {
  const int n = g.order();
  const int m = n - 1;  // vertices 1..n-1 live on bits 0..m-1
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) nb[i] = static_cast<std::uint32_t>(g.row_mask(i + 1) >> 1);
  const std::uint32_t from_zero = static_cast<std::uint32_t>(g.row_mask(0) >> 1);
  // ends[S]: vertices v in S such that some path from 0 covers {0} ∪ S and
  // stops at v
  std::vector<std::uint32_t> ends(std::size_t{1} << m, 0);
  for (std::uint32_t s = 1; s < (1U << m); ++s) {
    std::uint32_t e = 0;
    if (std::has_single_bit(s)) {
      e = s & from_zero;
    } else {
      for (std::uint32_t x = s; x; x &= x - 1) {
        const int i = std::countr_zero(x);
        if (ends[s ^ (1U << i)] & nb[i]) e |= 1U << i;
      }
    }
    ends[s] = e;
  }
  std::uint32_t s = (1U << m) - 1;
  std::uint32_t last = ends[s] & from_zero;
  if (!last) return std::nullopt;
  std::vector<int> tail;
  int v = std::countr_zero(last);
  while (true) {
    tail.push_back(v + 1);
    const std::uint32_t rest = s ^ (1U << v);
    if (!rest) break;
    v = std::countr_zero(ends[rest] & nb[v]);
    s = rest;
  }
  std::vector<int> order{0};
  order.insert(order.end(), tail.rbegin(), tail.rend());
  return canonical_cycle(std::move(order));
}

class Packer {
 public:
  Packer(const Graph& g, int target, std::int64_t budget)
      : n_(g.order()), target_(target), budget_(budget), rows_(rows_of(g)) {
    deg_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) deg_[v] = std::popcount(rows_[v]);
  }

  Packing solve() {
    Packing p;
    p.complete = dfs(0, 0);
    p.cycles = p.complete ? stack_ : best_;
    p.budget_exhausted = exhausted_;
    p.nodes = nodes_;
    return p;
  }

 private:
  bool dfs(int depth, int min_second) {
    if (depth == target_) return true;
    const int remaining = target_ - depth;
    for (int v = 0; v < n_; ++v) {
      if (deg_[v] < 2 * remaining) return false;
    }
    // every remaining cycle meets 0 twice, both times above min_second
    const std::uint64_t zero_open = rows_[0] & from_bit(min_second);
    if (std::popcount(zero_open) < 2 * remaining) return false;
    // when 0 has exactly the edges it needs, its smallest neighbour opens
    // the next cycle in canonical order
    const int forced = deg_[0] == 2 * remaining ? std::countr_zero(rows_[0]) : -1;

    bool found = false;
    CycleSearch search(n_, rows_, nodes_, budget_);
    search.run(min_second, forced, [&](const std::vector<int>& path) {
      toggle(path);
      stack_.push_back(HamCycle{path});
      if (stack_.size() > best_.size()) best_ = stack_;
      if (dfs(depth + 1, path[1] + 1)) {
        found = true;
        return true;
      }
      stack_.pop_back();
      toggle(path);
      return exhausted_;
    });
    if (search.exhausted()) exhausted_ = true;
    return found;
  }

  void toggle(const std::vector<int>& path) {
    for (int i = 0; i < n_; ++i) {
      const int u = path[i];
      const int v = path[(i + 1) % n_];
      const bool present = rows_[u] & bit(v);
      rows_[u] ^= bit(v);
      rows_[v] ^= bit(u);
      const int d = present ? -1 : 1;
      deg_[u] += d;
      deg_[v] += d;
    }
  }

  int n_;
  int target_;
  std::int64_t budget_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> deg_;
  std::vector<HamCycle> stack_;
  std::vector<HamCycle> best_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<HamCycle> find_hamilton(const Graph& g) {
  const int n = g.order();
  if (n > kHamiltonLimit) throw CapacityError("Hamilton search is limited to n <= 64");
  if (n < 3) return std::nullopt;
  if (n <= kHamiltonDpLimit) return hamilton_dp(g);
  const auto rows = rows_of(g);
  std::int64_t nodes = 0;
  std::optional<HamCycle> found;
  CycleSearch(n, rows, nodes, 0).run(0, -1, [&](const std::vector<int>& path) {
    found = HamCycle{path};
    return true;
  });
  return found;
}

void for_each_hamilton_cycle(const Graph& g, const std::function<bool(const HamCycle&)>& visit) {
  const int n = g.order();
  if (n > kHamiltonLimit) throw CapacityError("Hamilton search is limited to n <= 64");
  const auto rows = rows_of(g);
  std::int64_t nodes = 0;
  CycleSearch(n, rows, nodes, 0).run(0, -1, [&](const std::vector<int>& path) {
    return !visit(HamCycle{path});
  });
}

Packing pack_hamilton(const Graph& g, int target, std::int64_t budget) {
  if (target < 0) throw DomainError("packing target must be >= 0");
  if (g.order() > kHamiltonLimit) throw CapacityError("Hamilton packing is limited to n <= 64");
  if (target == 0) {
    Packing p;
    p.complete = true;
    return p;
  }
  return Packer(g, target, budget).solve();
}

MaxPacking max_packing_exact(const Graph& g) {
  const int n = g.order();
  if (n > kMaxPackingExactLimit) {
    throw CapacityError("exact maximum packing is limited to n <= 12");
  }
  MaxPacking result;
  if (n < 3) {
    result.packing.complete = true;
    return result;
  }
  // k cycles form a 2k-regular spanning subgraph
  result.upper_bound = std::min(g.min_degree() / 2, reg_even_of_graph(g).degree / 2);
  for (int k = result.upper_bound; k >= 1; --k) {
    Packing p = pack_hamilton(g, k, 0);
    const std::int64_t spent = p.nodes;
    if (p.complete || static_cast<int>(p.cycles.size()) == k - 1) {
      result.max = static_cast<int>(p.cycles.size());
      result.packing = std::move(p);
      result.packing.complete = true;
      result.packing.nodes = spent;
      return result;
    }
  }
  result.packing.complete = true;
  return result;
}

Packing decompose_even_regular(const Graph& g, std::int64_t budget) {
  const int n = g.order();
  if (n == 0) throw DomainError("decomposition needs a non-empty graph");
  const int r = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != r) throw DomainError("decomposition needs a regular graph");
  }
  if (r % 2 != 0) throw DomainError("decomposition needs even degree, got " + std::to_string(r));
  if (budget == 0) budget = n <= kMaxPackingExactLimit ? -1 : kDefaultPackBudget;
  Packing p = pack_hamilton(g, r / 2, budget);
  if (p.complete) {
    std::set<Edge> covered;
    for (const HamCycle& c : p.cycles) {
      for (const Edge& e : c.edges()) covered.insert(e);
    }
    if (static_cast<int>(p.cycles.size()) != r / 2 ||
        static_cast<std::int64_t>(covered.size()) != g.size()) {
      throw InvariantError("decomposition does not cover the edge set");
    }
  }
  return p;
}

ConjectureReport conjecture_experiment(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw DomainError("conjecture experiment needs a non-empty graph");
  ConjectureReport r;
  r.n = n;
  r.delta = g.min_degree();
  if (2 * r.delta < n) throw DomainError("conjecture experiment needs delta >= n/2");
  if (n > kMaxPackingExactLimit) {
    throw CapacityError("conjecture experiment needs exact packing, limited to n <= 12");
  }
  r.reg_even = reg_even_of_graph(g).degree;
  r.bounds = regeven_bounds(n, r.delta);
  r.packing = max_packing_exact(g);
  r.graph_instance_holds = 2 * r.packing.max >= r.reg_even;
  r.bound_instance_holds = 2 * r.packing.max >= r.bounds.lower;
  r.verified = verify_packing(g, r.packing.packing).ok;
  return r;
}

PackingAudit verify_packing(const Graph& g, const Packing& p) {
  const int n = g.order();
  std::set<std::pair<int, int>> used;
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    const std::vector<int>& order = p.cycles[i].order;
    const std::string where = "cycle " + std::to_string(i);
    if (n < 3 || static_cast<int>(order.size()) != n) {
      return {false, where + " does not have n >= 3 vertices"};
    }
    std::set<int> seen(order.begin(), order.end());
    if (static_cast<int>(seen.size()) != n || *seen.begin() != 0 || *seen.rbegin() != n - 1) {
      return {false, where + " is not a permutation of the vertices"};
    }
    for (int j = 0; j < n; ++j) {
      int a = order[j];
      int b = order[(j + 1) % n];
      if (!g.has_edge(a, b)) {
        return {false, where + " uses non-edge " + std::to_string(a) + "-" + std::to_string(b)};
      }
      if (a > b) std::swap(a, b);
      if (!used.insert({a, b}).second) {
        return {false, where + " reuses edge " + std::to_string(a) + "-" + std::to_string(b)};
      }
    }
  }
  return {true, ""};
}

}  // namespace hampack
