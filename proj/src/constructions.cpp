#include "hampack/constructions.hpp"

#include <string>

#include "hampack/errors.hpp"
#include "hampack/rng.hpp"

namespace hampack {

Graph babai_graph(int m) {
  if (m < 1) throw DomainError("babai_graph requires m >= 1");
  const int a = 2 * m;
  const int n = 4 * m + 2;
  Graph g(n);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < n; ++v) g.add_edge(u, v);
  }
  for (int v = a; v < n; v += 2) g.add_edge(v, v + 1);
  return g;
}

ExtremalSpec extremal_spec(int n, int delta) {
  if (2 * delta <= n || delta >= n) {
    throw DomainError("extremal graph requires n/2 < delta < n (got n=" + std::to_string(n) +
                      ", delta=" + std::to_string(delta) + ")");
  }
  const std::int64_t disc = static_cast<std::int64_t>(n) * (2 * delta - n);
  // smallest b with 2b - n >= sqrt(disc), decided on squares
  int b = static_cast<int>((n + isqrt(disc)) / 2);
  auto admissible = [&](int c) {
    const std::int64_t t = 2 * static_cast<std::int64_t>(c) - n;
    return t >= 0 && t * t >= disc;
  };
  while (b > 0 && admissible(b - 1)) --b;
  while (!admissible(b)) ++b;
  while ((static_cast<std::int64_t>(b) * (delta + b - n)) % 2 != 0) ++b;
  if (b > n) {
    throw DomainError("no admissible class size for n=" + std::to_string(n) +
                      ", delta=" + std::to_string(delta));
  }
  return ExtremalSpec{n, delta, b, delta + b - n};
}

ExtremalGraph extremal_graph(int n, int delta) {
  ExtremalSpec spec = extremal_spec(n, delta);
  const int a = spec.small_class();
  Graph g(n);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < n; ++v) g.add_edge(u, v);
  }
  Graph inner = circulant_regular(spec.big_class, spec.inner_degree);
  for (const Edge& e : inner.edges()) g.add_edge(a + e.u, a + e.v);

  Partition part{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) (v < a ? part.a : part.b).insert(v);
  return ExtremalGraph{std::move(g), spec, std::move(part)};
}

Graph circulant_regular(int k, int d) {
  if (k < 0 || d < 0 || (k > 0 && d >= k) || (k == 0 && d > 0)) {
    throw DomainError("circulant_regular requires 0 <= d < k");
  }
  if ((static_cast<std::int64_t>(k) * d) % 2 != 0) {
    throw DomainError("k*d must be even for a d-regular graph on k vertices");
  }
  Graph g(k);
  for (int v = 0; v < k; ++v) {
    for (int off = 1; off <= d / 2; ++off) {
      const int w = (v + off) % k;
      if (!g.has_edge(v, w)) g.add_edge(v, w);
    }
    if (d % 2 == 1) {
      const int w = (v + k / 2) % k;
      if (!g.has_edge(v, w)) g.add_edge(v, w);
    }
  }
  return g;
}

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
  if (p.sign() < 0 || p > 1) throw DomainError("edge probability must lie in [0, 1]");
  Graph g(n);
  Rng rng(seed);
  const std::uint64_t threshold = Rng::threshold_for(p);
  const bool always = p >= 1;
  const bool never = p.sign() == 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // one draw per pair, in lexicographic pair order, regardless of p
      const bool keep = rng.bernoulli_threshold(threshold, always);
      if (keep && !never) g.add_edge(u, v);
    }
  }
  return g;
}

ReferenceKind parse_reference_kind(std::string_view name) {
  if (name == "complete") return ReferenceKind::complete;
  if (name == "complete_bipartite" || name == "bipartite") return ReferenceKind::complete_bipartite;
  if (name == "two_cliques" || name == "two-cliques" || name == "cliques") {
    return ReferenceKind::two_cliques;
  }
  if (name == "cycle") return ReferenceKind::cycle;
  throw InputError("unknown graph kind '" + std::string(name) + "'");
}

Graph reference_graph(int n, ReferenceKind kind) {
  if (n < 3) throw DomainError("reference graphs require n >= 3");
  const bool halves = kind == ReferenceKind::complete_bipartite || kind == ReferenceKind::two_cliques;
  if (halves && n % 2 != 0) throw DomainError("bipartite and two-clique graphs require even n");
  Graph g(n);
  const int h = n / 2;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool edge = false;
      switch (kind) {
        case ReferenceKind::complete:
          edge = true;
          break;
        case ReferenceKind::complete_bipartite:
          edge = (u < h) != (v < h);
          break;
        case ReferenceKind::two_cliques:
          edge = (u < h) == (v < h);
          break;
        case ReferenceKind::cycle:
          edge = v == u + 1 || (u == 0 && v == n - 1);
          break;
      }
      if (edge) g.add_edge(u, v);
    }
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace hampack
