#include "hampack/expanders.hpp"

#include <algorithm>
#include <numeric>

#include "hampack/errors.hpp"
#include "hampack/rng.hpp"

namespace hampack {

RobustParams::RobustParams(Rational nu_, Rational tau_) : nu(std::move(nu_)), tau(std::move(tau_)) {
  if (!(nu.sign() > 0 && nu <= tau && tau < 1)) {
    throw DomainError("robust expansion parameters need 0 < nu <= tau < 1 (got nu=" +
                      to_string(nu) + ", tau=" + to_string(tau) + ")");
  }
}

std::string to_string(CheckMode mode) {
  return mode == CheckMode::exact ? "exact" : "monte_carlo";
}

std::string to_string(ExpansionStatus status) {
  switch (status) {
    case ExpansionStatus::certified:
      return "certified";
    case ExpansionStatus::refuted:
      return "refuted";
    case ExpansionStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

SizeWindow size_window(int n, const Rational& tau) {
  return SizeWindow{static_cast<int>(ceil_to_int(tau * n)),
                    static_cast<int>(floor_to_int((1 - tau) * n))};
}

VertexSet robust_neighborhood(const Graph& g, const VertexSet& s, const Rational& nu) {
  const int n = g.order();
  const Rational threshold = nu * n;
  VertexSet out(n);
  for (int v = 0; v < n; ++v) {
    if (Rational(g.neighbors(v).intersection_size(s)) >= threshold) out.insert(v);
  }
  return out;
}

bool violates_expansion(const Graph& g, const VertexSet& s, const RobustParams& p) {
  const int n = g.order();
  const Rational size(s.size());
  if (size < p.tau * n || size > (1 - p.tau) * n) return false;
  return Rational(robust_neighborhood(g, s, p.nu).size()) < size + p.nu * n;
}

VertexSet robust_out_neighborhood(const DiGraph& d, const VertexSet& s, const Rational& nu) {
  const int n = d.order();
  const Rational threshold = nu * n;
  VertexSet out(n);
  for (int v = 0; v < n; ++v) {
    if (Rational(d.in_neighbors(v).intersection_size(s)) >= threshold) out.insert(v);
  }
  return out;
}

bool violates_out_expansion(const DiGraph& d, const VertexSet& s, const RobustParams& p) {
  const int n = d.order();
  const Rational size(s.size());
  if (size < p.tau * n || size > (1 - p.tau) * n) return false;
  return Rational(robust_out_neighborhood(d, s, p.nu).size()) < size + p.nu * n;
}

namespace {

constexpr int kExactLimit = 22;

// Depth-first enumeration of sets in lexicographic order of their sorted
// member lists. `push[u]` lists the vertices whose count rises when u joins
// S (neighbours, or out-neighbours for digraphs).
class WindowEnumerator {
 public:
  WindowEnumerator(int n, std::vector<std::vector<int>> push, SizeWindow window, int threshold,
                   int margin)
      : n_(n),
        push_(std::move(push)),
        window_(window),
        threshold_(threshold),
        margin_(margin),
        count_(static_cast<std::size_t>(n), 0) {}

  /// Lexicographically first S in the window with |RN| < |S| + margin.
  std::optional<std::vector<int>> first_violation() {
    if (window_.lo > window_.hi || window_.hi < 1) return std::nullopt;
    if (recurse(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool recurse(int next) {
    const int size = static_cast<int>(chosen_.size());
    if (size >= 1 && window_.contains(size) && robust_ < size + margin_) return true;
    if (size == window_.hi) return false;
    for (int u = next; u < n_; ++u) {
      if (size + (n_ - u) < window_.lo) break;
      add(u);
      if (recurse(u + 1)) return true;
      remove(u);
    }
    return false;
  }

  void add(int u) {
    chosen_.push_back(u);
    for (int w : push_[u]) {
      if (++count_[w] == threshold_) ++robust_;
    }
  }

  void remove(int u) {
    chosen_.pop_back();
    for (int w : push_[u]) {
      if (count_[w]-- == threshold_) --robust_;
    }
  }

  int n_;
  std::vector<std::vector<int>> push_;
  SizeWindow window_;
  int threshold_;
  int margin_;
  std::vector<int> count_;
  std::vector<int> chosen_;
  int robust_ = 0;
};

ExpanderVerdict run_exact(int n, std::vector<std::vector<int>> push, const RobustParams& p) {
  if (n > kExactLimit) {
    throw CapacityError("exact robust-expansion check is limited to n <= 22; use the "
                        "Monte-Carlo refuter for larger graphs");
  }
  // d_S(v) >= νn  <=>  d_S(v) >= ceil(νn); |RN| >= |S| + νn likewise
  // ν > 0, so need >= 1 whenever n >= 1
  const int need = static_cast<int>(ceil_to_int(p.nu * n));
  ExpanderVerdict verdict;
  verdict.mode = CheckMode::exact;
  WindowEnumerator en(n, std::move(push), size_window(n, p.tau), need, need);
  if (auto w = en.first_violation()) {
    verdict.status = ExpansionStatus::refuted;
    verdict.witness = VertexSet(n, *w);
  } else {
    verdict.status = ExpansionStatus::certified;
  }
  return verdict;
}

}  // namespace

ExpanderVerdict is_robust_expander_exact(const Graph& g, const RobustParams& p) {
  const int n = g.order();
  if (n > kExactLimit) return run_exact(n, {}, p);
  std::vector<std::vector<int>> push(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) push[v] = g.neighbors(v).members();
  auto verdict = run_exact(n, std::move(push), p);
  if (verdict.witness && !violates_expansion(g, *verdict.witness, p)) {
    throw InvariantError("exact expander witness failed re-verification");
  }
  return verdict;
}

ExpanderVerdict is_robust_outexpander_exact(const DiGraph& d, const RobustParams& p) {
  const int n = d.order();
  if (n > kExactLimit) return run_exact(n, {}, p);
  std::vector<std::vector<int>> push(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) push[v] = d.out_neighbors(v).members();
  auto verdict = run_exact(n, std::move(push), p);
  if (verdict.witness && !violates_out_expansion(d, *verdict.witness, p)) {
    throw InvariantError("exact outexpander witness failed re-verification");
  }
  return verdict;
}

ExpanderVerdict refute_robust_expander_mc(const Graph& g, const RobustParams& p,
                                          std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("Monte-Carlo refutation needs samples >= 1");
  const int n = g.order();
  const SizeWindow window = size_window(n, p.tau);
  ExpanderVerdict verdict;
  verdict.mode = CheckMode::monte_carlo;
  verdict.status = ExpansionStatus::inconclusive;
  if (window.lo > window.hi) return verdict;

  auto try_set = [&](const VertexSet& s) {
    if (!window.contains(s.size())) return false;
    ++verdict.structured;
    if (violates_expansion(g, s, p)) {
      verdict.status = ExpansionStatus::refuted;
      verdict.witness = s;
      return true;
    }
    return false;
  };
  auto try_both = [&](const VertexSet& s) { return try_set(s) || try_set(s.complement()); };

  for (const VertexSet& comp : components(g, g.vertices())) {
    if (try_both(comp)) return verdict;
  }
  for (int v = 0; v < n; ++v) {
    VertexSet open = g.neighbors(v);
    if (try_both(open)) return verdict;
    VertexSet ball = open;
    ball.insert(v);
    if (try_both(ball)) return verdict;
    VertexSet ball2 = ball;
    ball.for_each([&](int u) { ball2 |= g.neighbors(u); });
    if (try_both(ball2)) return verdict;
  }
  std::vector<int> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (int pass = 0; pass < 2; ++pass) {
    VertexSet prefix(n);
    for (int k = 0; k < window.hi && k < n; ++k) {
      prefix.insert(by_degree[k]);
      if (try_set(prefix)) return verdict;
    }
    std::reverse(by_degree.begin(), by_degree.end());
  }

  Rng rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(n));
  const int span = window.hi - window.lo + 1;
  for (std::int64_t i = 0; i < samples; ++i) {
    ++verdict.samples;
    const int k = window.lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    std::iota(pool.begin(), pool.end(), 0);
    VertexSet s(n);
    for (int j = 0; j < k; ++j) {
      const auto pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - j)));
      std::swap(pool[j], pool[pick]);
      s.insert(pool[j]);
    }
    if (violates_expansion(g, s, p)) {
      verdict.status = ExpansionStatus::refuted;
      verdict.witness = std::move(s);
      return verdict;
    }
  }
  return verdict;
}

RobustParams min_degree_implies_expander_params(const Rational& eps, const Rational& tau) {
  if (!(eps.sign() > 0 && eps < Rational(1, 2))) throw DomainError("eps must lie in (0, 1/2)");
  if (!(tau.sign() > 0 && tau < 1)) throw DomainError("tau must lie in (0, 1)");
  return RobustParams(eps * tau / 2, tau);
}

DiGraph eulerian_orientation(const Graph& g) {
  const int n = g.order();
  struct Link {
    int to;
    int id;
  };
  std::vector<std::vector<Link>> adj(static_cast<std::size_t>(n));
  std::vector<Edge> ends;
  std::vector<char> is_virtual;
  auto link = [&](int u, int v, bool virt) {
    const int id = static_cast<int>(ends.size());
    ends.push_back(Edge(u, v));
    is_virtual.push_back(virt ? 1 : 0);
    adj[u].push_back({v, id});
    adj[v].push_back({u, id});
  };
  for (const Edge& e : g.edges()) link(e.u, e.v, false);
  int pending = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 0) continue;
    if (pending == -1) {
      pending = v;
    } else {
      link(pending, v, true);
      pending = -1;
    }
  }
  // every degree is now even, so each maximal walk of unused edges closes
  std::vector<char> used(ends.size(), 0);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  DiGraph d(n);
  for (int start = 0; start < n; ++start) {
    while (true) {
      int u = start;
      bool moved = false;
      while (true) {
        auto& c = cursor[u];
        while (c < adj[u].size() && used[adj[u][c].id]) ++c;
        if (c == adj[u].size()) break;
        const Link l = adj[u][c];
        used[l.id] = 1;
        if (!is_virtual[l.id]) d.add_arc(u, l.to);
        u = l.to;
        moved = true;
      }
      if (!moved) break;
    }
  }
  return d;
}

SparseFactorResult sparse_expander_factor(const Graph& g, const Rational& eps,
                                          const RobustParams& target, std::uint64_t seed,
                                          int attempts) {
  const int n = g.order();
  const Rational degree_exact = eps * n;
  if (boost::multiprecision::denominator(degree_exact) != 1) {
    throw DomainError("eps*n must be an integer");
  }
  const int k = static_cast<int>(floor_to_int(degree_exact));
  if (k < 2 || k % 2 != 0) throw DomainError("eps*n must be an even integer >= 2");
  if (attempts < 1) throw DomainError("attempts must be >= 1");
  if (!find_r_factor(g, k)) {
    throw ExistenceError("graph has no " + std::to_string(k) + "-factor");
  }

  const int delta = g.min_degree();
  const Rational keep = std::min(Rational(1), Rational(2 * k, std::max(delta, 1)));
  SparseFactorResult result;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    Graph sample(n);
    for (const Edge& e : g.edges()) {
      if (rng.bernoulli(keep)) sample.add_edge(e.u, e.v);
    }
    std::optional<Factor> f = find_r_factor(sample, k, &rng);
    if (!f) f = find_r_factor(g, k, &rng);
    if (!f) throw InvariantError("randomised extraction lost a factor that exists");
    const Graph h = f->mask.to_graph();
    ExpanderVerdict verdict =
        n <= kExactLimit
            ? is_robust_expander_exact(h, target)
            : refute_robust_expander_mc(h, target, kDefaultMcSamples,
                                        derive_seed(seed, 0x5eedULL + attempt));
    result.factor = std::move(*f);
    result.verdict = std::move(verdict);
    result.attempts_used = attempt + 1;
    result.accepted = !result.verdict.refuted();
    if (result.accepted) break;
  }
  return result;
}

}  // namespace hampack
