#include "pfqaoa/problems.hpp"

#include <bit>
#include <stdexcept>

namespace pfqaoa {

ProblemKind constrained_counterpart(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MaxPC: return ProblemKind::MinVC;
    case ProblemKind::MaxPI: return ProblemKind::MaxIS;
    case ProblemKind::MaxPCl: return ProblemKind::MaxCl;
    default: return kind;
  }
}

ProblemKind profit_counterpart(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MinVC: return ProblemKind::MaxPC;
    case ProblemKind::MaxIS: return ProblemKind::MaxPI;
    case ProblemKind::MaxCl: return ProblemKind::MaxPCl;
    default: return kind;
  }
}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MinVC: return "minvc";
    case ProblemKind::MaxIS: return "maxis";
    case ProblemKind::MaxCl: return "maxcl";
    case ProblemKind::MaxPC: return "maxpc";
    case ProblemKind::MaxPI: return "maxpi";
    case ProblemKind::MaxPCl: return "maxpcl";
  }
  return "unknown";
}

ProblemKind parse_problem_kind(std::string_view name) {
  for (ProblemKind kind : kAllKinds)
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown problem kind '" + std::string(name) + "'");
}

Penalties::Penalties(double a, double b) : a_(a), b_(b) {
  if (!(b > 0.0 && b < a))
    throw std::invalid_argument("penalties must satisfy 0 < B < A");
}

Assignment::Assignment(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n > kMaxAssignmentBits)
    throw std::invalid_argument("assignments support at most 64 vertices");
  if (n < kMaxAssignmentBits && (bits >> n) != 0)
    throw std::invalid_argument("assignment has bits beyond vertex count");
}

Assignment Assignment::all(std::size_t n) {
  return {n, n == kMaxAssignmentBits ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << n) - 1};
}

Assignment Assignment::from_vertices(std::size_t n, std::span<const Vertex> vs) {
  std::uint64_t bits = 0;
  for (Vertex v : vs) {
    if (v >= n) throw std::invalid_argument("vertex out of range");
    bits |= std::uint64_t{1} << v;
  }
  return {n, bits};
}

Assignment Assignment::from_string(std::string_view s) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("bitstring may only contain 0 and 1");
  }
  return {s.size(), bits};
}

std::size_t Assignment::count() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<Vertex> Assignment::vertices() const {
  std::vector<Vertex> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  return out;
}

std::string Assignment::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (contains(static_cast<Vertex>(i))) s[i] = '1';
  return s;
}

namespace {

void check_size(const Graph& g, const Assignment& x) {
  if (x.size() != g.num_vertices())
    throw std::invalid_argument("assignment length differs from vertex count");
}

// Selected pairs that are not edges of g.
std::size_t selected_non_edges(const Graph& g, const Assignment& x) {
  const std::size_t k = x.count();
  return k * (k - (k > 0 ? 1 : 0)) / 2 - induced_edges(g, x);
}

}  // namespace

std::size_t covered_edges(const Graph& g, const Assignment& x) {
  check_size(g, x);
  std::size_t covered = 0;
  for (const Edge& e : g.edges())
    if (x.contains(e.u) || x.contains(e.v)) ++covered;
  return covered;
}

std::size_t induced_edges(const Graph& g, const Assignment& x) {
  check_size(g, x);
  std::size_t inside = 0;
  for (const Edge& e : g.edges())
    if (x.contains(e.u) && x.contains(e.v)) ++inside;
  return inside;
}

bool is_vertex_cover(const Graph& g, const Assignment& x) {
  return covered_edges(g, x) == g.num_edges();
}

bool is_independent_set(const Graph& g, const Assignment& x) {
  return induced_edges(g, x) == 0;
}

bool is_clique(const Graph& g, const Assignment& x) {
  check_size(g, x);
  return selected_non_edges(g, x) == 0;
}

long profit_cover(const Graph& g, const Assignment& x) {
  return static_cast<long>(covered_edges(g, x)) - static_cast<long>(x.count());
}

long profit_independence(const Graph& g, const Assignment& x) {
  return static_cast<long>(x.count()) - static_cast<long>(induced_edges(g, x));
}

long profit_clique(const Graph& g, const Assignment& x) {
  check_size(g, x);
  return static_cast<long>(x.count()) -
         static_cast<long>(selected_non_edges(g, x));
}

bool is_feasible(ProblemKind kind, const Graph& g, const Assignment& x) {
  switch (kind) {
    case ProblemKind::MinVC: return is_vertex_cover(g, x);
    case ProblemKind::MaxIS: return is_independent_set(g, x);
    case ProblemKind::MaxCl: return is_clique(g, x);
    default: check_size(g, x); return true;
  }
}

long objective_value(ProblemKind kind, const Graph& g, const Assignment& x) {
  switch (kind) {
    case ProblemKind::MaxPC: return profit_cover(g, x);
    case ProblemKind::MaxPI: return profit_independence(g, x);
    case ProblemKind::MaxPCl: return profit_clique(g, x);
    default: check_size(g, x); return static_cast<long>(x.count());
  }
}

void check_penalties(ProblemKind kind, const std::optional<Penalties>& penalties) {
  if (is_constrained(kind) && !penalties)
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " requires penalty parameters");
  if (!is_constrained(kind) && penalties)
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " is penalty-free; penalties were supplied");
}

ProblemInstance::ProblemInstance(ProblemKind kind, Graph graph,
                                 std::optional<Penalties> penalties)
    : kind_(kind), graph_(std::move(graph)), penalties_(penalties) {
  check_penalties(kind_, penalties_);
}

ProblemInstance ProblemInstance::with_defaults(ProblemKind kind, Graph graph) {
  std::optional<Penalties> penalties;
  if (is_constrained(kind)) penalties = Penalties::defaults();
  return ProblemInstance(kind, std::move(graph), penalties);
}

double qubo_cost(ProblemKind kind, const Graph& g,
                 const std::optional<Penalties>& penalties, const Assignment& x) {
  check_penalties(kind, penalties);
  check_size(g, x);
  const auto selected = static_cast<double>(x.count());
  switch (kind) {
    case ProblemKind::MinVC: {
      const auto uncovered =
          static_cast<double>(g.num_edges() - covered_edges(g, x));
      return penalties->a() * uncovered + penalties->b() * selected;
    }
    case ProblemKind::MaxIS:
      return penalties->a() * static_cast<double>(induced_edges(g, x)) -
             penalties->b() * selected;
    case ProblemKind::MaxCl:
      return penalties->a() * static_cast<double>(selected_non_edges(g, x)) -
             penalties->b() * selected;
    case ProblemKind::MaxPC:
      return -static_cast<double>(profit_cover(g, x));
    case ProblemKind::MaxPI:
      return -static_cast<double>(profit_independence(g, x));
    case ProblemKind::MaxPCl:
      return -static_cast<double>(profit_clique(g, x));
  }
  return 0.0;
}

double qubo_cost(const ProblemInstance& instance, const Assignment& x) {
  return qubo_cost(instance.kind(), instance.graph(), instance.penalties(), x);
}

}  // namespace pfqaoa
