#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfqaoa/graph.hpp"
#include "pfqaoa/problems.hpp"

namespace pfqaoa {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinearTerm {
  Vertex v = 0;
  double coeff = 0.0;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct QuadraticTerm {
  Vertex u = 0;
  Vertex v = 0;
  double coeff = 0.0;

  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

/// Ising cost operator  sum_i h_i Z_i + sum_{u<v} J_uv Z_u Z_v + constant.
///
/// A freshly built operator keeps the per-edge and per-vertex Z contributions
/// as separate entries, mirroring the written Hamiltonian; consolidate() merges
/// them into one entry per vertex. Spin convention: z_v = 1 - 2 b_v, so a
/// selected vertex has eigenvalue -1.
struct IsingTerms {
  std::size_t n = 0;
  std::vector<LinearTerm> linear;
  std::vector<QuadraticTerm> quadratic;
  double constant = 0.0;

  /// Sum of all linear entries acting on v.
  double linear_coefficient(Vertex v) const;
  /// Sum of all quadratic entries on {u, v}.
  double quadratic_coefficient(Vertex u, Vertex v) const;

  /// Eigenvalue on basis state `index` without the constant.
  double energy(std::uint64_t index) const;
};

IsingTerms build_ising(ProblemKind kind, const Graph& g,
                       const std::optional<Penalties>& penalties);
IsingTerms build_ising(const ProblemInstance& instance);

/// One linear entry per vertex (all n present, ascending) and one quadratic
/// entry per pair (canonical order). The diagonal is unchanged.
IsingTerms consolidate(const IsingTerms& terms);

std::string ising_to_json(const IsingTerms& terms);
IsingTerms ising_from_json(const std::string& text);

inline constexpr std::size_t kDefaultQubitCap = 22;

/// The cost operator as a dense diagonal in the computational basis;
/// bit v of the index is qubit/vertex v.
struct DiagonalHamiltonian {
  std::size_t n = 0;
  std::vector<double> values;  // offset-free eigenvalues
  double offset = 0.0;

  std::size_t dimension() const { return values.size(); }
  double cost(std::uint64_t index) const { return values[index] + offset; }
  /// Minimum of values + offset.
  double min_cost() const;
};

/// Throws ResourceError when terms.n exceeds the qubit cap.
DiagonalHamiltonian build_diagonal(const IsingTerms& terms,
                                   std::size_t qubit_cap = kDefaultQubitCap);

}  // namespace pfqaoa
