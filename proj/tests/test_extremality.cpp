#include <doctest.h>

#include "hampack/constructions.hpp"
#include "hampack/errors.hpp"
#include "hampack/extremality.hpp"
#include "hampack/rng.hpp"
#include "oracles.hpp"

using namespace hampack;

static Graph complete(int n) { return reference_graph(n, ReferenceKind::complete); }

TEST_CASE("extremal graph is recognised with its own partition") {
  const ExtremalGraph e = extremal_graph(16, 9);
  const ExtremalityReport r = check_eta_extremal_pair(e.graph, Rational(1, 5), e.partition);
  CHECK(r.e1);
  CHECK(r.e2);
  CHECK(r.e3);
  CHECK(r.e4);
  CHECK(r.e5);
  CHECK(r.extremal);
  CHECK(r.alpha == Rational(1, 16));
  CHECK(r.size_a == 5);
  CHECK(r.size_b == 11);
  CHECK(r.e_ab == 55);
  CHECK(r.e_b == 22);
  CHECK(r.e4_bound == doctest::Approx(38.66).epsilon(1e-3));
  CHECK(r.uncovered == 0);
  CHECK(r.uncovered <= r.e5_bound);
}

TEST_CASE("babai pair") {
  const Graph g = babai_graph(2);
  const Partition part{VertexSet(10, {0, 1, 2, 3}), VertexSet(10, {4, 5, 6, 7, 8, 9})};
  const ExtremalityReport r = check_eta_extremal_pair(g, Rational(1, 4), part);
  CHECK(r.alpha == 0);
  CHECK(r.e_b == 3);
  CHECK(r.extremal);
  // swapping the classes breaks the size windows at small eta
  const Partition swapped{part.b, part.a};
  CHECK_FALSE(check_eta_extremal_pair(g, Rational(1, 20), swapped).extremal);
}

TEST_CASE("pair validation") {
  const Graph g = complete(6);
  CHECK_THROWS_AS(check_eta_extremal_pair(g, Rational(1, 5),
                                          Partition{VertexSet(6, {0, 1}), VertexSet(6, {1, 2})}),
                  InputError);
  CHECK_THROWS_AS(check_eta_extremal_pair(g, Rational(1, 5),
                                          Partition{VertexSet(7, {0}), VertexSet(7, {1})}),
                  InputError);
  CHECK_THROWS_AS(check_eta_extremal_pair(g, Rational(0),
                                          Partition{VertexSet(6, {0}), VertexSet(6, {1})}),
                  DomainError);
  const auto big = check_eta_extremal_pair(g, Rational(3, 2),
                                           Partition{VertexSet(6, {0}), VertexSet(6, {1})});
  CHECK(big.degenerate);
}

TEST_CASE("monotone in eta for a fixed pair") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_graph(10, Rational(7, 10), seed);
    Rng rng(seed);
    VertexSet a(10), b(10);
    for (int v = 0; v < 10; ++v) {
      const auto x = rng.below(3);
      if (x == 1) a.insert(v);
      if (x == 2) b.insert(v);
    }
    bool seen = false;
    for (int i = 1; i <= 20; ++i) {
      const bool now = check_eta_extremal_pair(g, Rational(i, 20), Partition{a, b}).extremal;
      if (seen) CHECK(now);
      seen = seen || now;
    }
  }
}

TEST_CASE("exact witness search") {
  const ExtremalityReport neg = find_eta_extremal_witness(random_graph(12, Rational(1, 2), 1),
                                                          Rational(1, 20),
                                                          {SearchMode::exact, 1, 20});
  CHECK_FALSE(neg.extremal);
  CHECK(neg.definitive);
  CHECK(neg.mode == SearchMode::exact);

  const ExtremalityReport pos =
      find_eta_extremal_witness(babai_graph(2), Rational(1, 4), {SearchMode::exact, 1, 20});
  REQUIRE(pos.extremal);
  REQUIRE(pos.partition);
  CHECK(check_eta_extremal_pair(babai_graph(2), Rational(1, 4), *pos.partition).extremal);

  CHECK_THROWS_AS(find_eta_extremal_witness(complete(15), Rational(1, 5), {SearchMode::exact, 1, 20}),
                  CapacityError);
}

TEST_CASE("exact witness search agrees with brute force") {
  int compared = 0, positives = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    const int n = 4 + static_cast<int>(rng.below(4));
    const Graph g = random_graph(n, Rational(4 + static_cast<int>(rng.below(6)), 10), seed);
    const Rational eta(1 + static_cast<int>(rng.below(6)), 20);
    const auto expected =
        oracle::extremal_pair_exists(g, static_cast<long double>(eta.convert_to<double>()));
    if (!expected) continue;
    const ExtremalityReport r = find_eta_extremal_witness(g, eta, {SearchMode::exact, 1, 20});
    CHECK(r.extremal == *expected);
    if (r.extremal) {
      ++positives;
      CHECK(check_eta_extremal_pair(g, eta, *r.partition).extremal);
    }
    ++compared;
  }
  CHECK(compared > 40);
  CHECK(positives > 0);
}

TEST_CASE("heuristic search") {
  const ExtremalGraph e = extremal_graph(16, 9);
  const ExtremalityReport r = find_eta_extremal_witness(e.graph, Rational(1, 5));
  CHECK(r.mode == SearchMode::heuristic);
  REQUIRE(r.extremal);
  CHECK(check_eta_extremal_pair(e.graph, Rational(1, 5), *r.partition).extremal);
  CHECK(r.restarts >= 1);

  const ExtremalityReport miss =
      find_eta_extremal_witness(complete(16), Rational(1, 50), {SearchMode::heuristic, 3, 4});
  CHECK_FALSE(miss.extremal);
  CHECK_FALSE(miss.definitive);

  const auto again = find_eta_extremal_witness(e.graph, Rational(1, 5), {SearchMode::heuristic, 5, 20});
  const auto twice = find_eta_extremal_witness(e.graph, Rational(1, 5), {SearchMode::heuristic, 5, 20});
  CHECK(again.partition->a == twice.partition->a);
  CHECK(again.partition->b == twice.partition->b);
}

TEST_CASE("almost-regular audit") {
  const ExtremalGraph e = extremal_graph(16, 9);
  const AlmostRegularAudit clean = almost_regular_audit(e.graph, e.partition, Rational(1, 5));
  CHECK(clean.clean());
  CHECK(clean.below_lower.empty());
  CHECK(clean.above_upper.empty());

  // in K_16 with B of half size every d_B = 7 falls below (α + √(α/2) - 3η)n ≈ 14
  VertexSet lo(16), hi(16);
  for (int v = 0; v < 8; ++v) lo.insert(v);
  for (int v = 8; v < 16; ++v) hi.insert(v);
  const AlmostRegularAudit dirty = almost_regular_audit(complete(16), Partition{lo, hi},
                                                        Rational(1, 100));
  REQUIRE(dirty.below_lower.size() == 8);
  CHECK(dirty.below_lower.front() == std::pair{8, 7});
  CHECK_FALSE(dirty.clean());

  // a dense B overshoots the upper bound everywhere
  Graph k = e.graph;
  for (int u : e.partition.b.members()) {
    for (int v : e.partition.b.members()) {
      if (u < v && !k.has_edge(u, v)) k.add_edge(u, v);
    }
  }
  const AlmostRegularAudit over = almost_regular_audit(k, e.partition, Rational(1, 10000));
  CHECK(over.above_upper.size() == 11);
  CHECK_FALSE(over.count_within_limit);
}

TEST_CASE("greedy sparsification") {
  const ExtremalGraph e = extremal_graph(16, 9);
  Graph g = e.graph;
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(0, 4);
  const Graph out = greedy_sparsify(g, e.partition.a);
  CHECK(out.min_degree() == g.min_degree());
  CHECK(out == e.graph);
  for (const Edge& x : out.edges()) {
    if (e.partition.a.contains(x.u) && e.partition.a.contains(x.v)) {
      CHECK_FALSE((out.degree(x.u) > 9 && out.degree(x.v) > 9));
    }
  }
  const Graph k6 = complete(6);
  CHECK(greedy_sparsify(k6, VertexSet(6, {0, 1, 2})) == k6);
}

TEST_CASE("greedy sparsification invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_graph(14, Rational(3, 5), seed);
    VertexSet a(14);
    for (int v = 0; v < 7; ++v) a.insert(v);
    const Graph out = greedy_sparsify(g, a);
    const int delta = g.min_degree();
    CHECK(out.min_degree() == delta);
    for (const Edge& x : out.edges()) {
      CHECK(g.has_edge(x.u, x.v));
      if (a.contains(x.u) && a.contains(x.v)) {
        CHECK_FALSE((out.degree(x.u) > delta && out.degree(x.v) > delta));
      }
    }
    for (const Edge& x : g.edges()) {
      if (!(a.contains(x.u) && a.contains(x.v))) CHECK(out.has_edge(x.u, x.v));
    }
  }
}

TEST_CASE("closeness examples") {
  const ClosenessReport cl = closeness(complete(12), ClosenessKind::two_cliques, Rational(1, 4));
  CHECK(cl.score == 36);
  CHECK(cl.close);
  CHECK(cl.mode == SearchMode::exact);
  CHECK(cl.a.size() == 6);
  const ClosenessReport bp = closeness(reference_graph(12, ReferenceKind::complete_bipartite),
                                       ClosenessKind::bipartite, Rational(0));
  CHECK(bp.score == 0);
  CHECK(bp.close);
  CHECK(closeness_score(reference_graph(12, ReferenceKind::complete_bipartite),
                        ClosenessKind::bipartite, bp.a) == 0);
  CHECK(closeness(reference_graph(12, ReferenceKind::two_cliques), ClosenessKind::two_cliques,
                  Rational(0))
            .score == 0);
  CHECK(parse_closeness_kind("cliques") == ClosenessKind::two_cliques);
  CHECK_THROWS_AS(parse_closeness_kind("tree"), InputError);
  CHECK_THROWS_AS(closeness(complete(12), ClosenessKind::bipartite, Rational(-1)), DomainError);
  CHECK_THROWS_AS(closeness(complete(25), ClosenessKind::bipartite, Rational(0),
                            {SearchMode::exact, 1, 20}),
                  CapacityError);
}

TEST_CASE("exact closeness matches brute force") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    const int n = 4 + static_cast<int>(rng.below(9));
    const Graph g = random_graph(n, Rational(1, 2), seed);
    for (ClosenessKind kind : {ClosenessKind::bipartite, ClosenessKind::two_cliques}) {
      const ClosenessReport r = closeness(g, kind, Rational(1, 10));
      CHECK(r.score == oracle::min_closeness(g, kind == ClosenessKind::bipartite));
      CHECK(closeness_score(g, kind, r.a) == r.score);
      CHECK(r.a.size() == n / 2);
    }
  }
}

TEST_CASE("heuristic closeness is an upper bound") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(12, Rational(1, 2), seed);
    const ClosenessReport h =
        closeness(g, ClosenessKind::two_cliques, Rational(1, 10), {SearchMode::heuristic, seed, 5});
    CHECK(h.upper_bound_only);
    CHECK(h.score >= oracle::min_closeness(g, false));
    CHECK(closeness_score(g, ClosenessKind::two_cliques, h.a) == h.score);
  }
  const Graph big = reference_graph(40, ReferenceKind::two_cliques);
  const ClosenessReport r = closeness(big, ClosenessKind::two_cliques, Rational(1, 100));
  CHECK(r.mode == SearchMode::heuristic);
  CHECK(r.score == 0);
}

TEST_CASE("trichotomy") {
  const Rational eps(1, 20);
  const auto bip = trichotomy_classify(reference_graph(12, ReferenceKind::complete_bipartite),
                                       Rational(1, 20), Rational(1, 10), Rational(1, 5), eps);
  CHECK(bip.label == TrichotomyLabel::close_bipartite);

  const Graph cliques = reference_graph(12, ReferenceKind::two_cliques);
  CHECK(trichotomy_classify(cliques, Rational(1, 20), Rational(1, 10), Rational(1, 5), eps).label ==
        TrichotomyLabel::hypothesis_violated);
  // at eps = 1/20 two cliques are also close to bipartite (e(A) = 6 <= 7.2)
  CHECK(trichotomy_classify(cliques, Rational(1, 10), Rational(1, 10), Rational(1, 5), eps).label ==
        TrichotomyLabel::close_bipartite);
  CHECK(trichotomy_classify(cliques, Rational(1, 10), Rational(1, 10), Rational(1, 5),
                            Rational(1, 50))
            .label == TrichotomyLabel::close_cliques);

  const auto full = trichotomy_classify(complete(12), Rational(1, 20), Rational(1, 10),
                                        Rational(1, 5), eps);
  CHECK(full.label == TrichotomyLabel::robust_expander);
  REQUIRE(full.expansion);
  CHECK(full.expansion->certified());

  CHECK_THROWS_AS(trichotomy_classify(complete(12), Rational(1, 5), Rational(1, 10),
                                      Rational(1, 5), eps),
                  DomainError);

  // dense random graphs satisfying the hypothesis land in some class
  int tried = 0;
  for (std::uint64_t seed = 1; seed <= 200 && tried < 5; ++seed) {
    const Graph g = random_graph(16, Rational(1, 2), seed);
    if (g.min_degree() < 7) continue;
    ++tried;
    const auto r = trichotomy_classify(g, Rational(1, 16), Rational(1, 16), Rational(1, 4), eps);
    CHECK(r.label != TrichotomyLabel::hypothesis_violated);
  }
  CHECK(tried > 0);
}
