#include "pfqaoa/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <utility>

#include "json.hpp"

namespace pfqaoa {

double IsingTerms::linear_coefficient(Vertex v) const {
  double sum = 0.0;
  for (const LinearTerm& t : linear)
    if (t.v == v) sum += t.coeff;
  return sum;
}

double IsingTerms::quadratic_coefficient(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  double sum = 0.0;
  for (const QuadraticTerm& t : quadratic)
    if (t.u == u && t.v == v) sum += t.coeff;
  return sum;
}

namespace {

inline double spin(std::uint64_t index, Vertex v) {
  return ((index >> v) & 1U) ? -1.0 : 1.0;
}

}  // namespace

double IsingTerms::energy(std::uint64_t index) const {
  double e = 0.0;
  for (const LinearTerm& t : linear) e += t.coeff * spin(index, t.v);
  for (const QuadraticTerm& t : quadratic)
    e += t.coeff * spin(index, t.u) * spin(index, t.v);
  return e;
}

IsingTerms build_ising(ProblemKind kind, const Graph& g,
                       const std::optional<Penalties>& penalties) {
  check_penalties(kind, penalties);

  const double a = penalties ? penalties->a() : 1.0;
  const double b = penalties ? penalties->b() : 1.0;
  const Graph conflict = uses_complement(kind) ? complement(g) : g;
  const auto num_v = static_cast<double>(g.num_vertices());
  const auto num_e = static_cast<double>(conflict.num_edges());

  // Cover family: x -> (1 - Z)/2 turns (1-x_u)(1-x_v) into
  // (1 + Z_u + Z_v + Z_u Z_v)/4. Independence family: x_u x_v becomes
  // (1 - Z_u - Z_v + Z_u Z_v)/4.
  const bool cover_family =
      kind == ProblemKind::MinVC || kind == ProblemKind::MaxPC;
  const double edge_linear = cover_family ? a / 4.0 : -a / 4.0;
  const double vertex_linear = cover_family ? -b / 2.0 : b / 2.0;

  IsingTerms terms;
  terms.n = g.num_vertices();
  terms.linear.reserve(2 * conflict.num_edges() + g.num_vertices());
  terms.quadratic.reserve(conflict.num_edges());
  for (const Edge& e : conflict.edges()) {
    terms.quadratic.push_back({e.u, e.v, a / 4.0});
    terms.linear.push_back({e.u, edge_linear});
    terms.linear.push_back({e.v, edge_linear});
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    terms.linear.push_back({v, vertex_linear});

  switch (kind) {
    case ProblemKind::MinVC:
      terms.constant = a * num_e / 4.0 + b * num_v / 2.0;
      break;
    case ProblemKind::MaxPC:
      terms.constant = num_v / 2.0 - 3.0 * num_e / 4.0;
      break;
    case ProblemKind::MaxIS:
    case ProblemKind::MaxCl:
    case ProblemKind::MaxPI:
    case ProblemKind::MaxPCl:
      terms.constant = a * num_e / 4.0 - b * num_v / 2.0;
      break;
  }
  return terms;
}

IsingTerms build_ising(const ProblemInstance& instance) {
  return build_ising(instance.kind(), instance.graph(), instance.penalties());
}

IsingTerms consolidate(const IsingTerms& terms) {
  IsingTerms out;
  out.n = terms.n;
  out.constant = terms.constant;

  std::vector<double> h(terms.n, 0.0);
  for (const LinearTerm& t : terms.linear) h[t.v] += t.coeff;
  out.linear.reserve(terms.n);
  for (Vertex v = 0; v < terms.n; ++v) out.linear.push_back({v, h[v]});

  std::map<std::pair<Vertex, Vertex>, double> couplings;
  for (const QuadraticTerm& t : terms.quadratic)
    couplings[{std::min(t.u, t.v), std::max(t.u, t.v)}] += t.coeff;
  out.quadratic.reserve(couplings.size());
  for (const auto& [edge, coeff] : couplings)
    out.quadratic.push_back({edge.first, edge.second, coeff});
  return out;
}

std::string ising_to_json(const IsingTerms& terms) {
  nlohmann::json j;
  j["n"] = terms.n;
  j["linear"] = nlohmann::json::array();
  for (const LinearTerm& t : terms.linear)
    j["linear"].push_back({t.v, t.coeff});
  j["quadratic"] = nlohmann::json::array();
  for (const QuadraticTerm& t : terms.quadratic)
    j["quadratic"].push_back({t.u, t.v, t.coeff});
  j["constant"] = terms.constant;
  return j.dump(2);
}

IsingTerms ising_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  IsingTerms terms;
  terms.n = j.at("n").get<std::size_t>();
  for (const auto& t : j.at("linear")) {
    auto v = t.at(0).get<Vertex>();
    if (v >= terms.n) throw std::invalid_argument("linear term vertex out of range");
    terms.linear.push_back({v, t.at(1).get<double>()});
  }
  for (const auto& t : j.at("quadratic")) {
    auto u = t.at(0).get<Vertex>();
    auto v = t.at(1).get<Vertex>();
    if (u >= terms.n || v >= terms.n || u == v)
      throw std::invalid_argument("invalid quadratic term");
    terms.quadratic.push_back({std::min(u, v), std::max(u, v), t.at(2).get<double>()});
  }
  terms.constant = j.at("constant").get<double>();
  return terms;
}

double DiagonalHamiltonian::min_cost() const {
  return *std::min_element(values.begin(), values.end()) + offset;
}

DiagonalHamiltonian build_diagonal(const IsingTerms& terms, std::size_t qubit_cap) {
  if (terms.n > qubit_cap)
    throw ResourceError(std::to_string(terms.n) + " qubits exceed the cap of " +
                        std::to_string(qubit_cap));
  const std::uint64_t dim = std::uint64_t{1} << terms.n;
  DiagonalHamiltonian diag;
  diag.n = terms.n;
  diag.offset = terms.constant;
  diag.values.assign(dim, 0.0);

  for (const LinearTerm& t : terms.linear) {
    const std::uint64_t mask = std::uint64_t{1} << t.v;
    for (std::uint64_t x = 0; x < dim; ++x)
      diag.values[x] += (x & mask) ? -t.coeff : t.coeff;
  }
  for (const QuadraticTerm& t : terms.quadratic) {
    const std::uint64_t mask = (std::uint64_t{1} << t.u) | (std::uint64_t{1} << t.v);
    for (std::uint64_t x = 0; x < dim; ++x) {
      // z_u z_v = -1 exactly when one of the two bits is set.
      const bool odd = std::popcount(x & mask) == 1;
      diag.values[x] += odd ? -t.coeff : t.coeff;
    }
  }
  return diag;
}

}  // namespace pfqaoa
