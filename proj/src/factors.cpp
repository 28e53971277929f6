#include "hampack/factors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hampack/errors.hpp"
#include "hampack/expanders.hpp"
#include "hampack/matching.hpp"
#include "hampack/rng.hpp"

namespace hampack {

namespace {

// Tutte's r-factor gadget. Host edge i = (u, v) becomes stubs 2i (at u) and
// 2i+1 (at v) joined by an edge; vertex v gets d(v) - r core vertices, each
// adjacent to every stub at v. Perfect matchings correspond to r-factors:
// an edge is in the factor iff its two stubs are matched to each other.
struct Gadget {
  SparseGraph graph;
  std::vector<Edge> host_edges;
  std::vector<int> core_begin;  // cores of v: [core_begin[v], core_begin[v+1])
  std::vector<std::vector<int>> stubs_at;
};

Gadget build_gadget(const Graph& g, int r) {
  Gadget gd;
  gd.host_edges = g.edges();
  const int n = g.order();
  const int m = static_cast<int>(gd.host_edges.size());
  gd.stubs_at.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < m; ++i) {
    gd.stubs_at[gd.host_edges[i].u].push_back(2 * i);
    gd.stubs_at[gd.host_edges[i].v].push_back(2 * i + 1);
  }
  gd.core_begin.assign(static_cast<std::size_t>(n) + 1, 2 * m);
  for (int v = 0; v < n; ++v) gd.core_begin[v + 1] = gd.core_begin[v] + (g.degree(v) - r);
  gd.graph = SparseGraph(gd.core_begin[n]);
  for (int i = 0; i < m; ++i) gd.graph.add_edge(2 * i, 2 * i + 1);
  for (int v = 0; v < n; ++v) {
    for (int c = gd.core_begin[v]; c < gd.core_begin[v + 1]; ++c) {
      for (int s : gd.stubs_at[v]) gd.graph.add_edge(c, s);
    }
  }
  return gd;
}

bool is_perfect(const std::vector<int>& mate) {
  return std::all_of(mate.begin(), mate.end(), [](int x) { return x != -1; });
}

Factor factor_from_matching(const Gadget& gd, const std::vector<int>& mate, int n, int r) {
  std::vector<Edge> chosen;
  for (std::size_t i = 0; i < gd.host_edges.size(); ++i) {
    const int a = static_cast<int>(2 * i);
    if (mate[a] == a + 1) chosen.push_back(gd.host_edges[i]);
  }
  return Factor{EdgeSubgraphMask(n, std::move(chosen)), r};
}

std::int64_t violation_amount(const Graph& g, int r, const VertexSet& s, const VertexSet& t) {
  auto c = tutte_quantities(g, r, s, t);
  return c.q_r - c.r_r;
}

// Vertex-wise hill climbing over the three labels S / T / rest, maximising
// q_r - r_r. Used when the Gallai-Edmonds reading alone does not violate.
std::optional<TutteCertificate> climb(const Graph& g, int r, VertexSet s, VertexSet t) {
  const int n = g.order();
  std::int64_t best = violation_amount(g, r, s, t);
  bool improved = true;
  while (best <= 0 && improved) {
    improved = false;
    for (int v = 0; v < n && best <= 0; ++v) {
      const int current = s.contains(v) ? 0 : (t.contains(v) ? 1 : 2);
      for (int label = 0; label < 3; ++label) {
        if (label == current) continue;
        VertexSet s2 = s;
        VertexSet t2 = t;
        if (current == 0) s2.erase(v);
        if (current == 1) t2.erase(v);
        if (label == 0) s2.insert(v);
        if (label == 1) t2.insert(v);
        const std::int64_t val = violation_amount(g, r, s2, t2);
        if (val > best) {
          best = val;
          s = std::move(s2);
          t = std::move(t2);
          improved = true;
          break;
        }
      }
    }
  }
  if (best > 0) return tutte_quantities(g, r, s, t);
  return std::nullopt;
}

TutteCertificate certificate_from_gadget(const Graph& g, int r, const Gadget& gd,
                                         const std::vector<int>& mate) {
  const int n = g.order();
  const auto cls = gallai_edmonds(gd.graph, mate);
  VertexSet s(n);
  VertexSet t(n);
  for (int v = 0; v < n; ++v) {
    if (gd.core_begin[v] < gd.core_begin[v + 1]) {
      // cores of v are twins, so they share one class
      switch (cls[gd.core_begin[v]]) {
        case GallaiClass::deficient:
          s.insert(v);
          break;
        case GallaiClass::barrier:
          t.insert(v);
          break;
        case GallaiClass::covered:
          break;
      }
    } else {
      const auto& stubs = gd.stubs_at[v];
      const bool all_barrier =
          !stubs.empty() && std::all_of(stubs.begin(), stubs.end(), [&](int st) {
            return cls[st] == GallaiClass::barrier;
          });
      (all_barrier ? s : t).insert(v);
    }
  }
  auto cert = tutte_quantities(g, r, s, t);
  if (cert.violated()) return cert;
  if (auto better = climb(g, r, s, t)) return *better;
  if (n <= 14) {
    if (auto found = tutte_find_violation(g, r)) return *found;
  }
  throw InvariantError("gadget has no perfect matching but no violating Tutte pair was located");
}

std::vector<int> shuffled_order(int n, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return order;
}

}  // namespace

TutteCertificate tutte_quantities(const Graph& g, int r, const VertexSet& s, const VertexSet& t) {
  const int n = g.order();
  if (s.universe() != n || t.universe() != n) throw InputError("vertex sets do not match the graph");
  if (s.intersects(t)) throw InputError("S and T must be disjoint");
  TutteCertificate c{s, t, 0, 0};
  const VertexSet rest = (s | t).complement();
  for (const VertexSet& comp : components(g, rest)) {
    const std::int64_t parity =
        static_cast<std::int64_t>(r) * comp.size() + ordered_pairs(g, comp, t);
    if (parity % 2 != 0) ++c.q_r;
  }
  std::int64_t deg_t = 0;
  t.for_each([&](int v) { deg_t += g.degree(v); });
  c.r_r = deg_t - ordered_pairs(g, s, t) + static_cast<std::int64_t>(r) * (s.size() - t.size());
  return c;
}

std::optional<Factor> find_r_factor(const Graph& g, int r, Rng* rng) {
  const int n = g.order();
  if (r < 0) throw DomainError("r must be non-negative");
  if ((static_cast<std::int64_t>(r) * n) % 2 != 0) return std::nullopt;
  if (n > 0 && g.min_degree() < r) return std::nullopt;
  if (r == 0) return Factor{EdgeSubgraphMask(n), 0};
  Gadget gd = build_gadget(g, r);
  std::vector<int> order;
  if (rng != nullptr) order = shuffled_order(gd.graph.order(), *rng);
  auto mate = maximum_matching(gd.graph, order);
  if (!is_perfect(mate)) return std::nullopt;
  Factor f = factor_from_matching(gd, mate, n, r);
  if (!audit_factor(g, f)) throw InvariantError("gadget matching produced an irregular factor");
  return f;
}

FactorDecision r_factor_exists(const Graph& g, int r) {
  const int n = g.order();
  if (r < 0 || (n > 0 && r > n - 1)) throw DomainError("r must satisfy 0 <= r <= n-1");
  FactorDecision out;
  if ((static_cast<std::int64_t>(r) * n) % 2 != 0) {
    // Σ r|C| over the components of G is odd, so one of them counts towards q_r
    out.parity_rejected = true;
    out.certificate = tutte_quantities(g, r, VertexSet(n), VertexSet(n));
    return out;
  }
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < r) {
      VertexSet t(n);
      t.insert(v);
      out.certificate = tutte_quantities(g, r, VertexSet(n), t);
      return out;
    }
  }
  if (r == 0) {
    out.exists = true;
    out.factor = Factor{EdgeSubgraphMask(n), 0};
    return out;
  }
  Gadget gd = build_gadget(g, r);
  auto mate = maximum_matching(gd.graph);
  if (is_perfect(mate)) {
    out.exists = true;
    out.factor = factor_from_matching(gd, mate, n, r);
    if (!audit_factor(g, *out.factor)) {
      throw InvariantError("gadget matching produced an irregular factor");
    }
    return out;
  }
  out.certificate = certificate_from_gadget(g, r, gd, mate);
  return out;
}

std::optional<TutteCertificate> tutte_find_violation(const Graph& g, int r) {
  const int n = g.order();
  if (n > 14) throw CapacityError("exhaustive Tutte verification is limited to n <= 14");
  std::vector<std::uint32_t> row(static_cast<std::size_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    row[v] = static_cast<std::uint32_t>(g.row_mask(v));
    deg[v] = std::popcount(row[v]);
  }
  const std::uint32_t full = n == 0 ? 0U : ((1U << n) - 1U);
  for (std::uint32_t s = 0;; ++s) {
    const std::uint32_t free_for_t = full & ~s;
    std::int64_t s_term = static_cast<std::int64_t>(r) * std::popcount(s);
    for (std::uint32_t t = free_for_t;; t = (t - 1) & free_for_t) {
      std::int64_t rr = s_term - static_cast<std::int64_t>(r) * std::popcount(t);
      for (std::uint32_t bits = t; bits; bits &= bits - 1) {
        const int v = std::countr_zero(bits);
        rr += deg[v] - std::popcount(row[v] & s);
      }
      std::int64_t q = 0;
      std::uint32_t rest = full & ~(s | t);
      while (rest) {
        std::uint32_t comp = rest & (~rest + 1U);
        std::uint32_t frontier = comp;
        while (frontier) {
          const int v = std::countr_zero(frontier);
          frontier &= frontier - 1;
          const std::uint32_t fresh = row[v] & rest & ~comp;
          comp |= fresh;
          frontier |= fresh;
        }
        rest &= ~comp;
        std::int64_t parity = static_cast<std::int64_t>(r) * std::popcount(comp);
        for (std::uint32_t bits = comp; bits; bits &= bits - 1) {
          parity += std::popcount(row[std::countr_zero(bits)] & t);
        }
        if (parity % 2 != 0) ++q;
      }
      if (q > rr) {
        return TutteCertificate{VertexSet::from_mask(n, s), VertexSet::from_mask(n, t), q, rr};
      }
      if (t == 0) break;
    }
    if (s == full) break;
  }
  return std::nullopt;
}

bool tutte_verify_exhaustive(const Graph& g, int r) { return !tutte_find_violation(g, r).has_value(); }

Factor extract_r_factor(const Graph& g, int r) {
  FactorDecision d = r_factor_exists(g, r);
  if (d.exists) return *d.factor;
  std::string msg = "graph has no " + std::to_string(r) + "-factor";
  if (d.certificate) {
    msg += " (S=" + std::to_string(d.certificate->s.size()) +
           " vertices, T=" + std::to_string(d.certificate->t.size()) +
           " vertices, Q=" + std::to_string(d.certificate->q_r) +
           " > R=" + std::to_string(d.certificate->r_r) + ")";
  }
  throw ExistenceError(msg);
}

RegEvenResult reg_even_of_graph(const Graph& g) {
  const int n = g.order();
  int top = n == 0 ? 0 : g.min_degree();
  if (top % 2 != 0) --top;
  // r-factors with r even split into 2-factors, so existence is monotone
  for (int r = top; r >= 2; r -= 2) {
    if (auto f = find_r_factor(g, r)) return RegEvenResult{r, std::move(*f)};
  }
  return RegEvenResult{0, Factor{EdgeSubgraphMask(n), 0}};
}

bool RegEvenBounds::admits(std::int64_t k) const {
  if (below_half) return k <= 0;
  // k <= δ/2 + s/2 + 4/(s+4), s = sqrt(D)  <=>  s(2k-δ-4) <= D + 8 + 4δ - 8k
  const std::int64_t disc = static_cast<std::int64_t>(n) * (2 * delta - n);
  const Rational a(disc + 8 + 4 * static_cast<std::int64_t>(delta) - 8 * k);
  const Rational b(-(2 * k - delta - 4));
  return sign_with_root(a, b, Rational(disc)) >= 0;
}

RegEvenBounds regeven_bounds(int n, int delta) {
  if (n <= 0 || delta < 0 || delta >= n) throw DomainError("bounds require 0 <= delta < n");
  RegEvenBounds b;
  b.n = n;
  b.delta = delta;
  if (2 * delta < n) {
    b.below_half = true;
    b.note = "delta < n/2: reg_even(n, delta) = 0";
    return b;
  }
  const std::int64_t disc = static_cast<std::int64_t>(n) * (2 * delta - n);
  // largest even L with 2L - δ < sqrt(disc + 8)
  auto strictly_below = [&](std::int64_t L) {
    const std::int64_t t = 2 * L - delta;
    return t < 0 || t * t < disc + 8;
  };
  std::int64_t L = (delta + isqrt(disc + 8)) / 2 + 2;
  if (L % 2 != 0) ++L;
  while (!strictly_below(L)) L -= 2;
  b.lower = static_cast<int>(std::max<std::int64_t>(L, 0));
  const std::int64_t root8 = isqrt(disc + 8);
  b.lower_boundary = root8 * root8 == disc + 8 && (delta + root8) % 4 == 0;
  const double s = std::sqrt(static_cast<double>(disc));
  b.upper = (delta + s) / 2.0 + 4.0 / (s + 4.0);
  if (b.lower_boundary) b.note = "lower expression is an even integer; slack 2 applied";
  return b;
}

std::vector<Factor> petersen_two_factorization(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  const int d = g.degree(0);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != d) throw DomainError("2-factorisation requires a regular graph");
  }
  if (d % 2 != 0) throw DomainError("2-factorisation requires even degree");
  const DiGraph oriented = eulerian_orientation(g);
  // out-copy v -> vertex v, in-copy v -> vertex n + v
  SparseGraph cover(2 * n);
  for (auto [u, v] : oriented.arcs()) cover.add_edge(u, n + v);
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Factor> out;
  for (int round = 0; round < d / 2; ++round) {
    SparseGraph remaining(2 * n);
    for (auto [u, v] : oriented.arcs()) {
      if (!used[u][v]) remaining.add_edge(u, n + v);
    }
    auto mate = maximum_matching(remaining);
    std::vector<Edge> chosen;
    for (int u = 0; u < n; ++u) {
      if (mate[u] == -1) throw InvariantError("regular bipartite cover lacks a perfect matching");
      const int v = mate[u] - n;
      used[u][v] = 1;
      chosen.emplace_back(u, v);
    }
    out.push_back(Factor{EdgeSubgraphMask(n, std::move(chosen)), 2});
  }
  return out;
}

EvenTargetDegree target_factor_degree(int n, const Rational& alpha, const Rational& eps) {
  const Rational sum = alpha + eps;
  if (sum.sign() < 0) throw DomainError("requires alpha >= -eps");
  if (alpha >= Rational(1, 2)) throw DomainError("requires alpha < 1/2");
  EvenTargetDegree out;
  out.rational_part = Rational(n, 4) + sum * n / 2;
  out.radicand = sum / 2;
  out.approx = to_double(out.rational_part) + n * std::sqrt(to_double(out.radicand));
  std::int64_t k = static_cast<std::int64_t>(std::floor(out.approx)) + 2;
  if (k % 2 != 0) ++k;
  // largest even k with k <= rational_part + n sqrt(radicand)
  while (sign_with_root(out.rational_part - k, Rational(n), out.radicand) < 0) k -= 2;
  out.even_floor = k;
  return out;
}

bool audit_factor(const Graph& g, const Factor& f) {
  if (f.mask.host_order() != g.order()) return false;
  for (const Edge& e : f.mask.edges()) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  const auto deg = f.mask.degrees();
  return std::all_of(deg.begin(), deg.end(), [&](int x) { return x == f.r; });
}

}  // namespace hampack
