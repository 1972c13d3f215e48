#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfqaoa/graph.hpp"

namespace pfqaoa {

enum class ProblemKind { MinVC, MaxIS, MaxCl, MaxPC, MaxPI, MaxPCl };

inline constexpr ProblemKind kAllKinds[] = {
    ProblemKind::MinVC, ProblemKind::MaxIS, ProblemKind::MaxCl,
    ProblemKind::MaxPC, ProblemKind::MaxPI, ProblemKind::MaxPCl};

/// Constrained kinds carry penalty terms; profit kinds do not.
constexpr bool is_constrained(ProblemKind kind) {
  return kind == ProblemKind::MinVC || kind == ProblemKind::MaxIS ||
         kind == ProblemKind::MaxCl;
}

/// Kinds whose conflict structure lives on the complement graph.
constexpr bool uses_complement(ProblemKind kind) {
  return kind == ProblemKind::MaxCl || kind == ProblemKind::MaxPCl;
}

/// MinVC <-> MaxPC, MaxIS <-> MaxPI, MaxCl <-> MaxPCl.
ProblemKind constrained_counterpart(ProblemKind kind);
ProblemKind profit_counterpart(ProblemKind kind);

/// Lower-case names: minvc, maxis, maxcl, maxpc, maxpi, maxpcl.
std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view name);

/// Penalty weights of the constrained QUBOs; requires 0 < B < A.
class Penalties {
 public:
  Penalties(double a, double b);

  static Penalties defaults() { return {3.0, 2.0}; }

  double a() const { return a_; }
  double b() const { return b_; }
  double lambda() const { return a_ / b_; }

  friend bool operator==(const Penalties&, const Penalties&) = default;

 private:
  double a_;
  double b_;
};

inline constexpr std::size_t kMaxAssignmentBits = 64;

/// Subset of vertices as a bitmask: bit v set means vertex v is selected.
/// The same integer indexes basis states of the simulator.
class Assignment {
 public:
  Assignment(std::size_t n, std::uint64_t bits);

  static Assignment none(std::size_t n) { return {n, 0}; }
  static Assignment all(std::size_t n);
  static Assignment from_vertices(std::size_t n, std::span<const Vertex> vs);
  /// Character i is '1' when vertex i is selected ("110" = {0, 1}).
  static Assignment from_string(std::string_view s);

  std::size_t size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  std::size_t count() const;
  std::vector<Vertex> vertices() const;
  std::string to_string() const;

  Assignment with(Vertex v) const { return {n_, bits_ | (std::uint64_t{1} << v)}; }
  Assignment without(Vertex v) const {
    return {n_, bits_ & ~(std::uint64_t{1} << v)};
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::size_t n_;
  std::uint64_t bits_;
};

bool is_vertex_cover(const Graph& g, const Assignment& x);
bool is_independent_set(const Graph& g, const Assignment& x);
bool is_clique(const Graph& g, const Assignment& x);

/// Edges with at least one selected endpoint.
std::size_t covered_edges(const Graph& g, const Assignment& x);
/// Edges with both endpoints selected.
std::size_t induced_edges(const Graph& g, const Assignment& x);

/// covered edges - selected vertices
long profit_cover(const Graph& g, const Assignment& x);
/// selected vertices - induced edges
long profit_independence(const Graph& g, const Assignment& x);
/// selected vertices - selected non-adjacent pairs
long profit_clique(const Graph& g, const Assignment& x);

/// Feasibility under the constraint family of `kind` (profit kinds are always
/// feasible).
bool is_feasible(ProblemKind kind, const Graph& g, const Assignment& x);

/// Objective in natural units: subset size for constrained kinds, profit for
/// profit kinds. Constrained kinds ignore feasibility here.
long objective_value(ProblemKind kind, const Graph& g, const Assignment& x);

/// Throws std::invalid_argument unless penalties are present exactly for
/// constrained kinds.
void check_penalties(ProblemKind kind, const std::optional<Penalties>& penalties);

/// A problem kind bound to a graph. Penalties are present exactly when the
/// kind is constrained.
class ProblemInstance {
 public:
  /// Throws std::invalid_argument when penalties are missing for a constrained
  /// kind or supplied for a profit kind.
  ProblemInstance(ProblemKind kind, Graph graph,
                  std::optional<Penalties> penalties = std::nullopt);

  /// Constrained kinds get default penalties, profit kinds none.
  static ProblemInstance with_defaults(ProblemKind kind, Graph graph);

  ProblemKind kind() const { return kind_; }
  const Graph& graph() const { return graph_; }
  const std::optional<Penalties>& penalties() const { return penalties_; }

 private:
  ProblemKind kind_;
  Graph graph_;
  std::optional<Penalties> penalties_;
};

/// QUBO value as a minimization objective: the vertex-cover QUBO as written,
/// and the negated objective for the five maximization kinds.
double qubo_cost(ProblemKind kind, const Graph& g,
                 const std::optional<Penalties>& penalties, const Assignment& x);
double qubo_cost(const ProblemInstance& instance, const Assignment& x);

}  // namespace pfqaoa
