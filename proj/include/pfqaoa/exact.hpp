#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfqaoa/graph.hpp"
#include "pfqaoa/problems.hpp"

namespace pfqaoa {

/// Optimum in natural units (subset size for MinVC/MaxIS/MaxCl, profit for
/// the profit kinds) with one witness subset.
struct ExactResult {
  ProblemKind kind = ProblemKind::MinVC;
  long optimum = 0;
  std::vector<Vertex> witness;  // ascending
  /// Every optimal subset as a bitmask, when the solver enumerated them.
  std::optional<std::vector<std::uint64_t>> all_optima;
};

inline constexpr std::size_t kBruteForceMaxVertices = 20;

struct BruteForceResult {
  /// QUBO minimization objective for every bitmask.
  std::vector<double> costs;
  double min_cost = 0.0;
  std::vector<std::uint64_t> minimizers;
  /// Natural-units optimum over feasible subsets.
  ExactResult best;
};

/// Exhaustive search over all 2^n subsets. Throws ResourceError above
/// kBruteForceMaxVertices vertices.
BruteForceResult brute_force(const ProblemInstance& instance);

/// Natural-units optimum only; penalties are not needed.
ExactResult brute_force_optimum(ProblemKind kind, const Graph& g);

/// Nemhauser-Trotter partition from a half-integral LP optimum.
struct Kernel {
  std::vector<Vertex> forced_in;  // LP value 1
  std::vector<Vertex> removed;    // LP value 0
  Graph graph;                    // induced on LP value 1/2, relabeled
  std::vector<Vertex> to_original;  // kernel vertex -> original vertex
};

/// Solves the vertex-cover LP through a maximum matching and Koenig cover of
/// the bipartite double cover. min VC(g) = |forced_in| + min VC(kernel).
Kernel lp_kernelize(const Graph& g);

/// Repeatedly takes a vertex of highest remaining degree (lowest index on
/// ties) until every edge is covered.
std::vector<Vertex> greedy_vertex_cover(const Graph& g);

/// A vertex cover of size <= k, or nullopt if none exists.
std::optional<std::vector<Vertex>> bounded_search_tree(const Graph& g, std::size_t k);

/// Kernelize, greedy upper bound, then shrink the budget with the search tree
/// until it fails.
ExactResult exact_min_vc(const Graph& g);
/// V minus a minimum vertex cover of g.
ExactResult exact_max_is(const Graph& g);
/// V minus a minimum vertex cover of the complement.
ExactResult exact_max_clique(const Graph& g);

/// Any of the six kinds through the exact vertex-cover solver; profit optima
/// follow from the cover/independence/clique equivalences.
ExactResult exact_solve(ProblemKind kind, const Graph& g);

}  // namespace pfqaoa
