#pragma once

#include <cstdint>
#include <string_view>

#include "hampack/graph.hpp"
#include "hampack/rational.hpp"

namespace hampack {

/// Class sizes of the extremal construction for given (n, delta).
struct ExtremalSpec {
  int n = 0;
  int delta = 0;
  /// |B|: smallest integer with big_class*(delta+big_class-n) even and
  /// big_class >= (n + sqrt(n(2 delta - n))) / 2.
  int big_class = 0;
  /// Degree of G[B], delta + big_class - n.
  int inner_degree = 0;
  int small_class() const noexcept { return n - big_class; }
};

struct ExtremalGraph {
  Graph graph;
  ExtremalSpec spec;
  /// a = the empty class A = {0..|A|-1}, b = the class B.
  Partition partition;
};

/// Independent class A of size 2m joined completely to a class B of size
/// 2m+2 that carries a perfect matching. A = {0..2m-1}, B = {2m..4m+1}.
Graph babai_graph(int m);

/// Class sizes for the extremal construction; requires n/2 < delta < n.
ExtremalSpec extremal_spec(int n, int delta);

/// Empty A, complete A-B join, circulant inner_degree-regular G[B].
ExtremalGraph extremal_graph(int n, int delta);

/// d-regular circulant on Z_k: offsets ±1..±floor(d/2), plus k/2 when d is odd.
Graph circulant_regular(int k, int d);

/// G(n, p): each pair independently with probability p, driven by Rng(seed).
Graph random_graph(int n, const Rational& p, std::uint64_t seed);

enum class ReferenceKind { complete, complete_bipartite, two_cliques, cycle };

ReferenceKind parse_reference_kind(std::string_view name);

/// K_n, K_{n/2,n/2}, K_{n/2} ∪ K_{n/2} or C_n. The halves are {0..n/2-1} and
/// {n/2..n-1}.
Graph reference_graph(int n, ReferenceKind kind);

/// Petersen graph: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
Graph petersen_graph();

}  // namespace hampack
