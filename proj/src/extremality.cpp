#include "hampack/extremality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "hampack/errors.hpp"
#include "hampack/rng.hpp"

namespace hampack {

std::string to_string(SearchMode mode) { return mode == SearchMode::exact ? "exact" : "heuristic"; }

std::string to_string(ClosenessKind kind) {
  return kind == ClosenessKind::bipartite ? "bipartite" : "two_cliques";
}

ClosenessKind parse_closeness_kind(std::string_view name) {
  if (name == "bipartite") return ClosenessKind::bipartite;
  if (name == "two_cliques" || name == "two-cliques" || name == "cliques") {
    return ClosenessKind::two_cliques;
  }
  throw InputError("unknown closeness kind '" + std::string(name) + "'");
}

std::string to_string(TrichotomyLabel label) {
  switch (label) {
    case TrichotomyLabel::close_bipartite:
      return "close_bipartite";
    case TrichotomyLabel::close_cliques:
      return "close_cliques";
    case TrichotomyLabel::robust_expander:
      return "robust_expander";
    case TrichotomyLabel::hypothesis_violated:
      return "hypothesis_violated";
    case TrichotomyLabel::unclassified:
      return "unclassified";
  }
  return "unclassified";
}

namespace {

/// Exact E1-E5 predicates for a fixed (n, δ, η).
class Conditions {
 public:
  Conditions(int n, int delta, Rational eta) : n_(n), eta_(std::move(eta)) {
    alpha_ = n > 0 ? Rational(delta, n) - Rational(1, 2) : Rational(0);
    alpha_plus_ = alpha_.sign() > 0 ? alpha_ : Rational(0);
    q_ = alpha_plus_ / 2;
  }

  const Rational& alpha() const { return alpha_; }
  const Rational& alpha_plus() const { return alpha_plus_; }

  bool e1(int a) const {
    const Rational lo = Rational(a) - (Rational(1, 2) - eta_) * n_;
    const Rational hi = (Rational(1, 2) + eta_) * n_ - a;
    return sign_with_root(lo, n_, q_) >= 0 && sign_with_root(hi, -n_, q_) >= 0;
  }
  bool e2(int b) const {
    const Rational lo = Rational(b) - (Rational(1, 2) - eta_) * n_;
    const Rational hi = (Rational(1, 2) + eta_) * n_ - b;
    return sign_with_root(lo, -n_, q_) >= 0 && sign_with_root(hi, n_, q_) >= 0;
  }
  bool e3(std::int64_t eab, int a, int b) const {
    return Rational(eab) > (1 - eta_) * a * b;
  }
  bool e4(std::int64_t eb, int b) const {
    const Rational half = Rational(n_) * b / 2;
    return sign_with_root((alpha_plus_ + eta_) * half - eb, half, q_) > 0;
  }
  bool e5(int uncovered) const { return Rational(uncovered) <= 2 * eta_ * n_; }

  void fill_bounds(ExtremalityReport& r, int b) const {
    const double n = n_;
    const double root = std::sqrt(to_double(q_));
    const double eta = to_double(eta_);
    r.a_lo = (0.5 - root - eta) * n;
    r.a_hi = (0.5 - root + eta) * n;
    r.b_lo = (0.5 + root - eta) * n;
    r.b_hi = (0.5 + root + eta) * n;
    r.e4_bound = (to_double(alpha_plus_) + root + eta) * n * b / 2;
    r.e5_bound = 2 * eta * n;
  }

 private:
  int n_;
  Rational eta_;
  Rational alpha_;
  Rational alpha_plus_;
  Rational q_;
};

ExtremalityReport blank_report(const Graph& g, const Rational& eta, const Conditions& c) {
  ExtremalityReport r;
  r.n = g.order();
  r.delta = g.order() > 0 ? g.min_degree() : 0;
  r.eta = eta;
  r.alpha = c.alpha();
  r.alpha_plus = c.alpha_plus();
  r.degenerate = eta >= 1;
  c.fill_bounds(r, 0);
  return r;
}

void evaluate(const Graph& g, const Conditions& c, const Partition& part, ExtremalityReport& r) {
  if (part.a.universe() != g.order() || part.b.universe() != g.order()) {
    throw InputError("partition universe does not match the graph order");
  }
  if (part.a.intersects(part.b)) throw InputError("partition classes A and B overlap");
  r.partition = part;
  r.size_a = part.a.size();
  r.size_b = part.b.size();
  r.e_ab = edges_between(g, part.a, part.b);
  r.e_b = edges_within(g, part.b);
  r.uncovered = g.order() - r.size_a - r.size_b;
  r.e1 = c.e1(r.size_a);
  r.e2 = c.e2(r.size_b);
  r.e3 = c.e3(r.e_ab, r.size_a, r.size_b);
  r.e4 = c.e4(r.e_b, r.size_b);
  r.e5 = c.e5(r.uncovered);
  r.extremal = r.e1 && r.e2 && r.e3 && r.e4;
  c.fill_bounds(r, r.size_b);
  r.e3_bound = (1 - to_double(r.eta)) * r.size_a * r.size_b;
  if (r.extremal && !r.e5) {
    throw InvariantError("E1 and E2 hold but E5 fails");
  }
}

ExtremalityReport exact_witness(const Graph& g, const Rational& eta, const Conditions& c) {
  const int n = g.order();
  if (n > kExactExtremalLimit) {
    throw CapacityError("exact extremality search is limited to n <= 14; use heuristic mode");
  }
  ExtremalityReport r = blank_report(g, eta, c);
  r.mode = SearchMode::exact;
  r.definitive = true;

  std::vector<char> allow_a(static_cast<std::size_t>(n + 1)), allow_b(allow_a.size());
  for (int k = 0; k <= n; ++k) {
    allow_a[k] = c.e1(k);
    allow_b[k] = c.e2(k);
  }
  // e(A,B) must reach min_eab[a][b]; e(B) may not exceed max_eb[b]
  std::vector<std::vector<std::int64_t>> min_eab(static_cast<std::size_t>(n + 1),
                                                 std::vector<std::int64_t>(n + 1));
  std::vector<std::int64_t> max_eb(static_cast<std::size_t>(n + 1), -1);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      min_eab[a][b] = floor_to_int((1 - eta) * a * b) + 1;
    }
  }
  for (int b = 0; b <= n; ++b) {
    for (std::int64_t e = static_cast<std::int64_t>(b) * (b - 1) / 2; e >= 0; --e) {
      if (c.e4(e, b)) {
        max_eb[b] = e;
        break;
      }
    }
  }

  std::vector<std::uint32_t> row(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) row[v] = static_cast<std::uint32_t>(g.row_mask(v));
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);

  for (std::uint32_t am = 0;; ++am) {
    const int a = std::popcount(am);
    if (allow_a[a]) {
      const std::uint32_t rest = full & ~am;
      std::uint32_t bm = 0;
      while (true) {
        const int b = std::popcount(bm);
        if (allow_b[b] && a + b <= n && max_eb[b] >= 0) {
          std::int64_t eab = 0;
          for (std::uint32_t x = am; x; x &= x - 1) eab += std::popcount(row[std::countr_zero(x)] & bm);
          if (eab >= min_eab[a][b]) {
            std::int64_t twice_eb = 0;
            for (std::uint32_t x = bm; x; x &= x - 1) {
              twice_eb += std::popcount(row[std::countr_zero(x)] & bm);
            }
            if (twice_eb / 2 <= max_eb[b]) {
              evaluate(g, c, Partition{VertexSet::from_mask(n, am), VertexSet::from_mask(n, bm)},
                       r);
              if (!r.extremal) throw InvariantError("tabulated extremality thresholds disagree");
              return r;
            }
          }
        }
        if (bm == rest) break;
        bm = (bm - rest) & rest;  // next submask in increasing order
      }
    }
    if (am == full) break;
  }
  return r;
}

// Labels: 0 outside, 1 in A, 2 in B.
class LocalSearch {
 public:
  LocalSearch(const Graph& g, const Rational& eta, const Conditions& c)
      : g_(g), n_(g.order()), cond_(c) {
    ExtremalityReport dummy;
    c.fill_bounds(dummy, 0);
    a_lo_ = dummy.a_lo;
    a_hi_ = dummy.a_hi;
    b_lo_ = dummy.b_lo;
    b_hi_ = dummy.b_hi;
    eta_ = to_double(eta);
    e4_coef_ = (to_double(c.alpha_plus()) + std::sqrt(to_double(c.alpha_plus()) / 2) + eta_) *
               n_ / 2.0;
    nbrs_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) nbrs_[v] = g.neighbors(v).members();
  }

  /// Runs from `labels`; returns a verified partition or nullopt.
  std::optional<Partition> descend(std::vector<int> labels) {
    load(labels);
    const int max_steps = 8 * n_ + 16;
    for (int step = 0; step < max_steps; ++step) {
      const double current = score(sa_, sb_, eab_, eb_);
      if (current <= 0) {
        Partition p = partition();
        ExtremalityReport probe;
        evaluate(g_, cond_, p, probe);
        if (probe.extremal) return p;
      }
      int best_v = -1;
      int best_label = 0;
      double best = current;
      for (int v = 0; v < n_; ++v) {
        for (int to = 0; to < 3; ++to) {
          if (to == label_[v]) continue;
          auto [sa, sb, eab, eb] = after_move(v, to);
          const double s = score(sa, sb, eab, eb);
          if (s < best - 1e-12) {
            best = s;
            best_v = v;
            best_label = to;
          }
        }
      }
      if (best_v < 0) break;
      apply(best_v, best_label);
    }
    return std::nullopt;
  }

 private:
  struct Stats {
    int sa;
    int sb;
    std::int64_t eab;
    std::int64_t eb;
  };

  static double outside(double x, double lo, double hi) {
    if (x < lo) return lo - x;
    if (x > hi) return x - hi;
    return 0;
  }

  double score(int sa, int sb, std::int64_t eab, std::int64_t eb) const {
    double s = outside(sa, a_lo_, a_hi_) + outside(sb, b_lo_, b_hi_);
    const double need = std::floor((1 - eta_) * sa * sb) + 1;
    if (static_cast<double>(eab) < need) s += (need - static_cast<double>(eab)) / std::max(n_, 1);
    const double cap = std::ceil(e4_coef_ * sb) - 1;
    if (static_cast<double>(eb) > cap) s += (static_cast<double>(eb) - cap) / std::max(n_, 1);
    return s;
  }

  Stats after_move(int v, int to) const {
    Stats st{sa_, sb_, eab_, eb_};
    if (label_[v] == 1) {
      --st.sa;
      st.eab -= cb_[v];
    } else if (label_[v] == 2) {
      --st.sb;
      st.eab -= ca_[v];
      st.eb -= cb_[v];
    }
    if (to == 1) {
      ++st.sa;
      st.eab += cb_[v];
    } else if (to == 2) {
      ++st.sb;
      st.eab += ca_[v];
      st.eb += cb_[v];
    }
    return st;
  }

  void load(const std::vector<int>& labels) {
    label_ = labels;
    ca_.assign(static_cast<std::size_t>(n_), 0);
    cb_.assign(static_cast<std::size_t>(n_), 0);
    sa_ = sb_ = 0;
    for (int v = 0; v < n_; ++v) {
      if (label_[v] == 1) ++sa_;
      if (label_[v] == 2) ++sb_;
      for (int w : nbrs_[v]) {
        if (label_[w] == 1) ++ca_[v];
        if (label_[w] == 2) ++cb_[v];
      }
    }
    eab_ = eb_ = 0;
    for (int v = 0; v < n_; ++v) {
      if (label_[v] == 1) eab_ += cb_[v];
      if (label_[v] == 2) eb_ += cb_[v];
    }
    eb_ /= 2;
  }

  void apply(int v, int to) {
    const Stats st = after_move(v, to);
    sa_ = st.sa;
    sb_ = st.sb;
    eab_ = st.eab;
    eb_ = st.eb;
    for (int w : nbrs_[v]) {
      if (label_[v] == 1) --ca_[w];
      if (label_[v] == 2) --cb_[w];
      if (to == 1) ++ca_[w];
      if (to == 2) ++cb_[w];
    }
    label_[v] = to;
  }

  Partition partition() const {
    Partition p{VertexSet(n_), VertexSet(n_)};
    for (int v = 0; v < n_; ++v) {
      if (label_[v] == 1) p.a.insert(v);
      if (label_[v] == 2) p.b.insert(v);
    }
    return p;
  }

  const Graph& g_;
  int n_;
  const Conditions& cond_;
  double a_lo_ = 0, a_hi_ = 0, b_lo_ = 0, b_hi_ = 0, eta_ = 0, e4_coef_ = 0;
  std::vector<std::vector<int>> nbrs_;
  std::vector<int> label_, ca_, cb_;
  int sa_ = 0, sb_ = 0;
  std::int64_t eab_ = 0, eb_ = 0;
};

ExtremalityReport heuristic_witness(const Graph& g, const Rational& eta, const Conditions& c,
                                    const WitnessSearchOptions& options) {
  const int n = g.order();
  ExtremalityReport r = blank_report(g, eta, c);
  r.mode = SearchMode::heuristic;
  r.definitive = false;
  if (options.restarts < 1) throw DomainError("restarts must be >= 1");

  const int target_a =
      std::clamp(static_cast<int>(std::lround((r.a_lo + r.a_hi) / 2)), 0, n);
  const int target_b =
      std::clamp(static_cast<int>(std::lround((r.b_lo + r.b_hi) / 2)), 0, n - target_a);

  std::vector<int> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int x, int y) { return g.degree(x) > g.degree(y); });

  LocalSearch search(g, eta, c);
  Rng rng(options.seed);
  for (int restart = 0; restart < options.restarts; ++restart) {
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    if (restart == 0) {
      // high-degree vertices first: the small class sees all of the big one
      for (int i = 0; i < n; ++i) {
        labels[by_degree[i]] = i < target_a ? 1 : (i < target_a + target_b ? 2 : 0);
      }
    } else if (restart == 1) {
      // greedy independent set in degree order as A
      int placed = 0;
      VertexSet blocked(n);
      for (int v : by_degree) {
        if (placed == target_a) break;
        if (blocked.contains(v)) continue;
        labels[v] = 1;
        ++placed;
        blocked |= g.neighbors(v);
      }
      int in_b = 0;
      for (int v = 0; v < n && in_b < target_b; ++v) {
        if (labels[v] == 0) {
          labels[v] = 2;
          ++in_b;
        }
      }
    } else {
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      for (int i = 0; i < n; ++i) {
        labels[order[i]] = i < target_a ? 1 : (i < target_a + target_b ? 2 : 0);
      }
    }
    r.restarts = restart + 1;
    if (auto p = search.descend(std::move(labels))) {
      const int restarts = r.restarts;
      evaluate(g, c, *p, r);
      r.restarts = restarts;
      return r;
    }
  }
  return r;
}

}  // namespace

ExtremalityReport check_eta_extremal_pair(const Graph& g, const Rational& eta,
                                          const Partition& part) {
  if (g.order() == 0) throw InputError("extremality needs a non-empty graph");
  if (eta.sign() <= 0) throw DomainError("eta must be positive");
  const Conditions c(g.order(), g.min_degree(), eta);
  ExtremalityReport r = blank_report(g, eta, c);
  evaluate(g, c, part, r);
  return r;
}

ExtremalityReport find_eta_extremal_witness(const Graph& g, const Rational& eta,
                                            const WitnessSearchOptions& options) {
  if (g.order() == 0) throw InputError("extremality needs a non-empty graph");
  if (eta.sign() <= 0) throw DomainError("eta must be positive");
  const Conditions c(g.order(), g.min_degree(), eta);
  const SearchMode mode = options.mode.value_or(
      g.order() <= kExactExtremalLimit ? SearchMode::exact : SearchMode::heuristic);
  return mode == SearchMode::exact ? exact_witness(g, eta, c)
                                   : heuristic_witness(g, eta, c, options);
}

AlmostRegularAudit almost_regular_audit(const Graph& g, const Partition& part,
                                        const Rational& eta) {
  const int n = g.order();
  if (part.a.intersects(part.b)) throw InputError("partition classes A and B overlap");
  AlmostRegularAudit audit;
  audit.eta = eta;
  audit.alpha = n > 0 ? Rational(g.min_degree(), n) - Rational(1, 2) : Rational(0);
  const Rational q = audit.alpha.sign() > 0 ? audit.alpha / 2 : Rational(0);
  const Rational eta_plus = eta.sign() > 0 ? eta : Rational(0);
  const double root_q = std::sqrt(to_double(q));
  const double root_eta = std::sqrt(to_double(eta_plus));
  audit.lower_bound = (to_double(audit.alpha) + root_q - 3 * to_double(eta)) * n;
  audit.upper_bound = (to_double(audit.alpha) + root_q + 2 * root_eta) * n;
  audit.count_limit = 2 * root_eta * n;
  const Rational nn = Rational(n) * n;

  part.b.for_each([&](int v) {
    const int d = g.neighbors(v).intersection_size(part.b);
    // (i) d - (α - 3η)n - n√q >= 0
    if (sign_with_root(Rational(d) - (audit.alpha - 3 * eta) * n, -n, q) < 0) {
      audit.below_lower.emplace_back(v, d);
    }
    // (ii) exceeded iff x = d - αn > n(√q + 2√η), i.e. x > 0 and
    //      x² - n²(q + 4η) > 4n²√(qη)
    const Rational x = Rational(d) - audit.alpha * n;
    if (x.sign() > 0 &&
        sign_with_root(x * x - nn * (q + 4 * eta_plus), -4 * nn, q * eta_plus) > 0) {
      audit.above_upper.emplace_back(v, d);
    }
  });
  const Rational count(static_cast<std::int64_t>(audit.above_upper.size()));
  audit.count_within_limit = count * count <= 4 * eta_plus * nn;
  return audit;
}

Graph greedy_sparsify(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.order()) throw InputError("vertex set universe does not match the graph");
  if (g.order() == 0) return g;
  const int delta = g.min_degree();
  Graph out = g;
  std::vector<int> deg = g.degrees();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : out.edges()) {
      if (!a.contains(e.u) || !a.contains(e.v)) continue;
      if (deg[e.u] > delta && deg[e.v] > delta) {
        out.remove_edge(e.u, e.v);
        --deg[e.u];
        --deg[e.v];
        changed = true;
      }
    }
  }
  return out;
}

std::int64_t closeness_score(const Graph& g, ClosenessKind kind, const VertexSet& a) {
  if (kind == ClosenessKind::bipartite) return edges_within(g, a);
  return edges_between(g, a, a.complement());
}

namespace {

ClosenessReport finish_closeness(ClosenessKind kind, const Rational& epsilon, int n,
                                 VertexSet a, std::int64_t score, SearchMode mode) {
  ClosenessReport r;
  r.kind = kind;
  r.epsilon = epsilon;
  r.a = std::move(a);
  r.score = score;
  r.mode = mode;
  r.upper_bound_only = mode == SearchMode::heuristic;
  r.threshold = epsilon * n * n;
  r.close = Rational(score) <= r.threshold;
  return r;
}

ClosenessReport exact_closeness(const Graph& g, ClosenessKind kind, const Rational& epsilon) {
  const int n = g.order();
  if (n > kExactClosenessLimit) {
    throw CapacityError("exact closeness is limited to n <= 24; use heuristic mode");
  }
  const int half = n / 2;
  std::vector<std::uint32_t> row(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) row[v] = static_cast<std::uint32_t>(g.row_mask(v));
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  // e(A, Ā) is symmetric under complement when |A| = |Ā|, so fix vertex 0 in A
  const bool pin_zero = kind == ClosenessKind::two_cliques && n % 2 == 0 && n > 0;

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint32_t best_mask = 0;
  auto consider = [&](std::uint32_t m) {
    if (pin_zero && !(m & 1U)) return;
    std::int64_t s = 0;
    if (kind == ClosenessKind::bipartite) {
      for (std::uint32_t x = m; x; x &= x - 1) s += std::popcount(row[std::countr_zero(x)] & m);
      s /= 2;
    } else {
      const std::uint32_t out = full & ~m;
      for (std::uint32_t x = m; x; x &= x - 1) s += std::popcount(row[std::countr_zero(x)] & out);
    }
    if (s < best) {
      best = s;
      best_mask = m;
    }
  };
  if (half == 0) {
    consider(0);
  } else {
    // Gosper's hack over all half-sized masks in increasing order
    std::uint64_t m = (1ULL << half) - 1;
    const std::uint64_t limit = 1ULL << n;
    while (m < limit) {
      consider(static_cast<std::uint32_t>(m));
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return finish_closeness(kind, epsilon, n, VertexSet::from_mask(n, best_mask), best,
                          SearchMode::exact);
}

ClosenessReport heuristic_closeness(const Graph& g, ClosenessKind kind, const Rational& epsilon,
                                    const WitnessSearchOptions& options) {
  const int n = g.order();
  const int half = n / 2;
  if (options.restarts < 1) throw DomainError("restarts must be >= 1");
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v).members();

  Rng rng(options.seed);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<char> best_in;
  std::vector<int> degree_order(static_cast<std::size_t>(n));
  std::iota(degree_order.begin(), degree_order.end(), 0);
  std::stable_sort(degree_order.begin(), degree_order.end(),
                   [&](int x, int y) { return g.degree(x) < g.degree(y); });

  for (int restart = 0; restart < options.restarts; ++restart) {
    std::vector<int> order = degree_order;
    if (restart > 0) rng.shuffle(order);
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < half; ++i) in[order[i]] = 1;
    // cnt[v] = neighbours of v inside A
    std::vector<int> cnt(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      for (int w : nbrs[v]) cnt[v] += in[w];
    }
    auto total = [&] {
      std::int64_t s = 0;
      for (int v = 0; v < n; ++v) {
        if (kind == ClosenessKind::bipartite) {
          if (in[v]) s += cnt[v];
        } else if (!in[v]) {
          s += cnt[v];
        }
      }
      return kind == ClosenessKind::bipartite ? s / 2 : s;
    };
    std::int64_t score = total();
    while (true) {
      std::int64_t best_delta = 0;
      int bu = -1, bw = -1;
      for (int u = 0; u < n; ++u) {
        if (!in[u]) continue;
        for (int w = 0; w < n; ++w) {
          if (in[w]) continue;
          const int adj = g.has_edge(u, w) ? 1 : 0;
          std::int64_t d;
          if (kind == ClosenessKind::bipartite) {
            d = -cnt[u] + (cnt[w] - adj);
          } else {
            // same-side minus cross-side counts, before the swap
            const int iu = cnt[u], eu = g.degree(u) - cnt[u];
            const int iw = g.degree(w) - cnt[w], ew = cnt[w];
            d = (iu - eu) + (iw - ew) + 2 * adj;
          }
          if (d < best_delta) {
            best_delta = d;
            bu = u;
            bw = w;
          }
        }
      }
      if (bu < 0) break;
      in[bu] = 0;
      in[bw] = 1;
      for (int x : nbrs[bu]) --cnt[x];
      for (int x : nbrs[bw]) ++cnt[x];
      score += best_delta;
    }
    if (score != total()) throw InvariantError("closeness swap bookkeeping drifted");
    if (score < best) {
      best = score;
      best_in = in;
    }
  }
  VertexSet a(n);
  for (int v = 0; v < n; ++v) {
    if (best_in[v]) a.insert(v);
  }
  return finish_closeness(kind, epsilon, n, std::move(a), best, SearchMode::heuristic);
}

}  // namespace

ClosenessReport closeness(const Graph& g, ClosenessKind kind, const Rational& epsilon,
                          const WitnessSearchOptions& options) {
  if (epsilon.sign() < 0) throw DomainError("epsilon must be non-negative");
  const SearchMode mode = options.mode.value_or(
      g.order() <= kExactClosenessLimit ? SearchMode::exact : SearchMode::heuristic);
  return mode == SearchMode::exact ? exact_closeness(g, kind, epsilon)
                                   : heuristic_closeness(g, kind, epsilon, options);
}

TrichotomyReport trichotomy_classify(const Graph& g, const Rational& kappa, const Rational& nu,
                                     const Rational& tau, const Rational& epsilon,
                                     std::uint64_t seed, std::int64_t mc_samples) {
  if (!(kappa <= nu && nu <= tau)) throw DomainError("trichotomy needs kappa <= nu <= tau");
  if (kappa.sign() < 0) throw DomainError("kappa must be non-negative");
  const RobustParams params(nu, tau);
  const int n = g.order();
  if (n == 0) throw InputError("trichotomy needs a non-empty graph");

  TrichotomyReport r;
  r.delta = g.min_degree();
  if (Rational(r.delta) < (Rational(1, 2) - kappa) * n) {
    r.label = TrichotomyLabel::hypothesis_violated;
    return r;
  }
  WitnessSearchOptions options;
  options.seed = seed;
  r.bipartite = closeness(g, ClosenessKind::bipartite, epsilon, options);
  if (r.bipartite->close) {
    r.label = TrichotomyLabel::close_bipartite;
    return r;
  }
  r.cliques = closeness(g, ClosenessKind::two_cliques, epsilon, options);
  if (r.cliques->close) {
    r.label = TrichotomyLabel::close_cliques;
    return r;
  }
  r.expansion = n <= 22 ? is_robust_expander_exact(g, params)
                        : refute_robust_expander_mc(g, params, mc_samples, seed);
  r.label = r.expansion->certified() ? TrichotomyLabel::robust_expander
                                     : TrichotomyLabel::unclassified;
  return r;
}

}  // namespace hampack
