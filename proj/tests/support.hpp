// Shared fixtures for the unit and acceptance tests: named graphs, a seeded
// graph source independent of the library generators, and from-definition
// oracles that do not call into the library's problem code.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pfqaoa/graph.hpp"
#include "pfqaoa/problems.hpp"

namespace testing {

using pfqaoa::Edge;
using pfqaoa::Graph;
using pfqaoa::ProblemKind;
using pfqaoa::Vertex;

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, e);
}

// Vertex 0 is the centre.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph(leaves + 1, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.push_back({u, static_cast<Vertex>(a + v)});
  return Graph(a + b, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({i, static_cast<Vertex>(i + 5)});
    e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  return Graph(10, e);
}

// Simple graph with independent edges; not necessarily connected.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph(n, e);
}

inline constexpr double kDensities[] = {0.1, 0.3, 0.5, 0.8};

inline bool bit(std::uint64_t x, Vertex v) { return (x >> v) & 1U; }

inline bool adjacent(const Graph& g, Vertex u, Vertex v) {
  for (const Edge& e : g.edges())
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  return false;
}

inline long popcount(std::uint64_t x) { return static_cast<long>(__builtin_popcountll(x)); }

// Counts straight from the edge list or vertex pairs.
inline long oracle_uncovered(const Graph& g, std::uint64_t x) {
  long c = 0;
  for (const Edge& e : g.edges()) c += !bit(x, e.u) && !bit(x, e.v);
  return c;
}

inline long oracle_inside(const Graph& g, std::uint64_t x) {
  long c = 0;
  for (const Edge& e : g.edges()) c += bit(x, e.u) && bit(x, e.v);
  return c;
}

inline long oracle_missing_pairs(const Graph& g, std::uint64_t x) {
  long c = 0;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) c += bit(x, u) && bit(x, v) && !adjacent(g, u, v);
  return c;
}

inline long oracle_profit(ProblemKind kind, const Graph& g, std::uint64_t x) {
  const long m = static_cast<long>(g.num_edges());
  switch (kind) {
    case ProblemKind::MinVC:
    case ProblemKind::MaxPC: return (m - oracle_uncovered(g, x)) - popcount(x);
    case ProblemKind::MaxIS:
    case ProblemKind::MaxPI: return popcount(x) - oracle_inside(g, x);
    case ProblemKind::MaxCl:
    case ProblemKind::MaxPCl: return popcount(x) - oracle_missing_pairs(g, x);
  }
  return 0;
}

// Minimization cost as defined per kind: the cover QUBO as written, negated
// maximization objectives otherwise.
inline double oracle_cost(ProblemKind kind, const Graph& g, double a, double b,
                          std::uint64_t x) {
  const double size = static_cast<double>(popcount(x));
  switch (kind) {
    case ProblemKind::MinVC: return a * static_cast<double>(oracle_uncovered(g, x)) + b * size;
    case ProblemKind::MaxIS: return a * static_cast<double>(oracle_inside(g, x)) - b * size;
    case ProblemKind::MaxCl:
      return a * static_cast<double>(oracle_missing_pairs(g, x)) - b * size;
    default: return -static_cast<double>(oracle_profit(kind, g, x));
  }
}

inline bool oracle_feasible(ProblemKind kind, const Graph& g, std::uint64_t x) {
  switch (kind) {
    case ProblemKind::MinVC: return oracle_uncovered(g, x) == 0;
    case ProblemKind::MaxIS: return oracle_inside(g, x) == 0;
    case ProblemKind::MaxCl: return oracle_missing_pairs(g, x) == 0;
    default: return true;
  }
}

// Optimum by enumeration: smallest cover, largest IS / clique, largest profit.
inline long oracle_optimum(ProblemKind kind, const Graph& g) {
  const std::size_t n = g.num_vertices();
  long best = kind == ProblemKind::MinVC ? static_cast<long>(n) + 1 : -1000000;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (!oracle_feasible(kind, g, x)) continue;
    const long v = pfqaoa::is_constrained(kind) ? popcount(x) : oracle_profit(kind, g, x);
    best = kind == ProblemKind::MinVC ? std::min(best, v) : std::max(best, v);
  }
  return best;
}

inline std::optional<pfqaoa::Penalties> default_penalties(ProblemKind kind) {
  if (pfqaoa::is_constrained(kind)) return pfqaoa::Penalties::defaults();
  return std::nullopt;
}

}  // namespace testing
