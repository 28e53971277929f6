#include <doctest.h>

#include <set>

#include "hampack/constructions.hpp"
#include "hampack/errors.hpp"
#include "hampack/hamilton.hpp"
#include "hampack/rng.hpp"
#include "oracles.hpp"

using namespace hampack;

static Graph complete(int n) { return reference_graph(n, ReferenceKind::complete); }
static Graph cycle(int n) { return reference_graph(n, ReferenceKind::cycle); }

static bool is_cycle_of(const Graph& g, const HamCycle& c) {
  if (static_cast<int>(c.order.size()) != g.order()) return false;
  std::set<int> seen(c.order.begin(), c.order.end());
  if (static_cast<int>(seen.size()) != g.order()) return false;
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    if (!g.has_edge(c.order[i], c.order[(i + 1) % c.order.size()])) return false;
  }
  return true;
}

TEST_CASE("canonical form") {
  const HamCycle c = canonical_cycle({3, 1, 0, 2});
  CHECK(c.order == std::vector<int>{0, 1, 3, 2});
  CHECK(canonical_cycle({0, 2, 3, 1}) == c);
  CHECK(c.edges().size() == 4);
}

TEST_CASE("small Hamilton examples") {
  const auto c7 = find_hamilton(cycle(7));
  REQUIRE(c7);
  CHECK(is_cycle_of(cycle(7), *c7));
  Graph k34(7);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 7; ++v) k34.add_edge(u, v);
  }
  CHECK_FALSE(find_hamilton(k34));
  CHECK_FALSE(find_hamilton(petersen_graph()));
  CHECK_FALSE(find_hamilton(Graph(2, {Edge(0, 1)})));
  CHECK(find_hamilton(complete(3)));
  CHECK_THROWS_AS(find_hamilton(complete(65)), CapacityError);
}

TEST_CASE("DP agrees with the permutation oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    const int n = 3 + static_cast<int>(rng.below(7));
    const Graph g = random_graph(n, Rational(2 + static_cast<int>(rng.below(6)), 10), seed);
    const auto c = find_hamilton(g);
    CHECK(c.has_value() == oracle::is_hamiltonian(g));
    if (c) CHECK(is_cycle_of(g, *c));
  }
}

TEST_CASE("backtracking above the DP limit") {
  for (int n = 21; n <= 64; n += 7) {
    const auto c = find_hamilton(cycle(n));
    REQUIRE(c);
    CHECK(is_cycle_of(cycle(n), *c));
    const Graph r = random_graph(n, Rational(1, 2), static_cast<std::uint64_t>(n));
    const auto d = find_hamilton(r);
    REQUIRE(d);  // dense random graphs with δ >= n/2 - O(√n) are Hamiltonian in practice
    CHECK(is_cycle_of(r, *d));
  }
  // a cut vertex kills every Hamilton cycle
  Graph bow(25);
  for (int u = 0; u < 13; ++u) {
    for (int v = u + 1; v < 13; ++v) bow.add_edge(u, v);
  }
  for (int u = 12; u < 25; ++u) {
    for (int v = u + 1; v < 25; ++v) bow.add_edge(u, v);
  }
  CHECK_FALSE(find_hamilton(bow));
}

TEST_CASE("enumeration is canonical and ordered") {
  std::vector<HamCycle> all;
  for_each_hamilton_cycle(complete(5), [&](const HamCycle& c) {
    all.push_back(c);
    return true;
  });
  CHECK(all.size() == 12);  // (5-1)!/2
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  for (const HamCycle& c : all) {
    CHECK(c.order.front() == 0);
    CHECK(c.order[1] < c.order.back());
  }
  int seen = 0;
  for_each_hamilton_cycle(complete(6), [&](const HamCycle&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("packing") {
  const Packing k5 = pack_hamilton(complete(5), 2);
  CHECK(k5.complete);
  CHECK(k5.cycles.size() == 2);
  CHECK(verify_packing(complete(5), k5).ok);

  const Packing k7 = pack_hamilton(complete(7), 3);
  CHECK(k7.complete);
  CHECK(verify_packing(complete(7), k7).ok);

  const Packing babai = pack_hamilton(babai_graph(2), 2, 0);
  CHECK_FALSE(babai.complete);
  CHECK_FALSE(babai.budget_exhausted);
  CHECK(babai.cycles.size() == 1);
  CHECK(verify_packing(babai_graph(2), babai).ok);

  const Packing none = pack_hamilton(complete(5), 0);
  CHECK(none.complete);
  CHECK(none.cycles.empty());

  const Packing starved = pack_hamilton(complete(9), 4, 3);
  CHECK(starved.budget_exhausted);
  CHECK_FALSE(starved.complete);
}

TEST_CASE("maximum packing") {
  CHECK(max_packing_exact(complete(5)).max == 2);
  const MaxPacking b = max_packing_exact(babai_graph(2));
  CHECK(b.max == 1);
  CHECK(verify_packing(babai_graph(2), b.packing).ok);
  CHECK(max_packing_exact(cycle(6)).max == 1);
  CHECK(max_packing_exact(petersen_graph()).max == 0);
  CHECK(max_packing_exact(complete(8)).max == 3);
  CHECK_THROWS_AS(max_packing_exact(complete(13)), CapacityError);
}

TEST_CASE("maximum packing never exceeds half the minimum degree") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_graph(8, Rational(7, 10), seed);
    const MaxPacking m = max_packing_exact(g);
    CHECK(m.max <= g.min_degree() / 2);
    CHECK(m.max <= m.upper_bound);
    CHECK(static_cast<int>(m.packing.cycles.size()) == m.max);
    CHECK(verify_packing(g, m.packing).ok);
  }
}

TEST_CASE("decomposition") {
  for (int n : {5, 7, 9}) {
    const Packing p = decompose_even_regular(complete(n));
    CHECK(p.complete);
    CHECK(static_cast<int>(p.cycles.size()) == (n - 1) / 2);
    CHECK(verify_packing(complete(n), p).ok);
    std::set<Edge> covered;
    for (const HamCycle& c : p.cycles) {
      for (const Edge& e : c.edges()) covered.insert(e);
    }
    CHECK(static_cast<std::int64_t>(covered.size()) == complete(n).size());
  }
  CHECK(decompose_even_regular(cycle(8)).cycles.size() == 1);
  CHECK(decompose_even_regular(circulant_regular(11, 4)).complete);
  CHECK_THROWS_AS(decompose_even_regular(petersen_graph()), DomainError);
  CHECK_THROWS_AS(decompose_even_regular(babai_graph(1)), DomainError);
  // two disjoint triangles are 2-regular but have no Hamilton cycle at all
  Graph tt(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
  CHECK_FALSE(decompose_even_regular(tt).complete);
}

TEST_CASE("conjecture experiment") {
  const ConjectureReport k6 = conjecture_experiment(complete(6));
  CHECK(k6.reg_even == 4);
  CHECK(k6.packing.max == 2);
  CHECK(k6.graph_instance_holds);
  CHECK(k6.bound_instance_holds);
  CHECK(k6.verified);

  const ConjectureReport b = conjecture_experiment(babai_graph(2));
  CHECK(b.reg_even == 2);
  CHECK(b.packing.max == 1);
  CHECK(b.graph_instance_holds);

  CHECK_THROWS_AS(conjecture_experiment(cycle(8)), DomainError);
  CHECK_THROWS_AS(conjecture_experiment(complete(13)), CapacityError);
}

TEST_CASE("packing audit catches bad input") {
  const Graph k5 = complete(5);
  Packing p;
  p.cycles.push_back(HamCycle{{0, 1, 2, 3, 4}});
  CHECK(verify_packing(k5, p).ok);
  p.cycles.push_back(HamCycle{{0, 1, 3, 2, 4}});  // reuses 0-1
  CHECK_FALSE(verify_packing(k5, p).ok);

  Packing short_cycle;
  short_cycle.cycles.push_back(HamCycle{{0, 1, 2, 3}});
  CHECK_FALSE(verify_packing(k5, short_cycle).ok);

  Packing repeat;
  repeat.cycles.push_back(HamCycle{{0, 1, 2, 1, 4}});
  CHECK_FALSE(verify_packing(k5, repeat).ok);

  Packing missing;
  missing.cycles.push_back(HamCycle{{0, 1, 2, 3, 4}});
  Graph holed = k5;
  holed.remove_edge(3, 4);
  CHECK_FALSE(verify_packing(holed, missing).ok);
}
