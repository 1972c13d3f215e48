#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfqaoa/exact.hpp"
#include "pfqaoa/hamiltonian.hpp"
#include "pfqaoa/metrics.hpp"
#include "pfqaoa/optimizer.hpp"
#include "pfqaoa/postprocess.hpp"
#include "pfqaoa/simulator.hpp"

namespace py = pybind11;
using namespace pfqaoa;

namespace {

using PenaltyPair = std::optional<std::pair<double, double>>;

std::optional<Penalties> to_penalties(ProblemKind kind, const PenaltyPair& p) {
  if (p) return Penalties(p->first, p->second);
  if (is_constrained(kind)) return Penalties::defaults();
  return std::nullopt;
}

DiagonalHamiltonian diagonal_for(const std::string& kind, const Graph& g, const PenaltyPair& p) {
  const ProblemKind k = parse_problem_kind(kind);
  return build_diagonal(build_ising(k, g, to_penalties(k, p)));
}

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

std::vector<double> from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  return {a.data(), a.data() + a.size()};
}

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) out.push_back({u, v});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Profit and penalty QUBO formulations for QAOA on graph problems";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph(n, to_edges(edges));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("complete", &Graph::complete, py::arg("n"))
      .def_static("erdos_renyi", &gen_erdos_renyi_connected, py::arg("n"), py::arg("p"),
                  py::arg("seed"), "Connected G(n, p) sample; resamples until connected.")
      .def_static("regular", &gen_regular, py::arg("n"), py::arg("degree"), py::arg("seed"))
      .def_static("parse", [](const std::string& text) { return parse_edge_list(text); })
      .def("serialize", &serialize_edge_list)
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("density", &Graph::density)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("kinds", [] {
    std::vector<std::string> out;
    for (ProblemKind k : kAllKinds) out.emplace_back(to_string(k));
    return out;
  });

  m.def(
      "objective",
      [](const std::string& kind, const Graph& g, const std::string& bits) {
        const Assignment a = Assignment::from_string(bits);
        const ProblemKind k = parse_problem_kind(kind);
        return py::make_tuple(objective_value(k, g, a), is_feasible(k, g, a));
      },
      py::arg("kind"), py::arg("graph"), py::arg("bitstring"),
      "(value, feasible) of a subset given as a bitstring, vertex i at character i.");

  m.def(
      "qubo_cost",
      [](const std::string& kind, const Graph& g, const std::string& bits,
         const PenaltyPair& penalties) {
        const ProblemKind k = parse_problem_kind(kind);
        return qubo_cost(k, g, to_penalties(k, penalties), Assignment::from_string(bits));
      },
      py::arg("kind"), py::arg("graph"), py::arg("bitstring"), py::arg("penalties") = py::none());

  m.def(
      "ising",
      [](const std::string& kind, const Graph& g, const PenaltyPair& penalties) {
        const ProblemKind k = parse_problem_kind(kind);
        const IsingTerms t = consolidate(build_ising(k, g, to_penalties(k, penalties)));
        py::dict linear, quadratic;
        for (const LinearTerm& l : t.linear) linear[py::int_(l.v)] = l.coeff;
        for (const QuadraticTerm& q : t.quadratic)
          quadratic[py::make_tuple(q.u, q.v)] = q.coeff;
        py::dict out;
        out["n"] = t.n;
        out["constant"] = t.constant;
        out["linear"] = linear;
        out["quadratic"] = quadratic;
        return out;
      },
      py::arg("kind"), py::arg("graph"), py::arg("penalties") = py::none(),
      "Consolidated Ising terms; z = +1 means the vertex is not selected.");

  m.def(
      "diagonal",
      [](const std::string& kind, const Graph& g, const PenaltyPair& penalties) {
        const DiagonalHamiltonian d = diagonal_for(kind, g, penalties);
        return py::make_tuple(to_array(d.values), d.offset);
      },
      py::arg("kind"), py::arg("graph"), py::arg("penalties") = py::none(),
      "(offset-free eigenvalues indexed by bitmask, offset).");

  m.def(
      "probabilities",
      [](const std::string& kind, const Graph& g, const std::vector<double>& gammas,
         const std::vector<double>& betas, const PenaltyPair& penalties) {
        const DiagonalHamiltonian d = diagonal_for(kind, g, penalties);
        if (gammas.empty()) return to_array(probabilities(Statevector::uniform(g.num_vertices())));
        return to_array(probabilities(run_qaoa(d, QaoaParams(gammas, betas))));
      },
      py::arg("kind"), py::arg("graph"), py::arg("gammas"), py::arg("betas"),
      py::arg("penalties") = py::none());

  m.def(
      "expectation",
      [](const std::string& kind, const Graph& g, const std::vector<double>& gammas,
         const std::vector<double>& betas, const PenaltyPair& penalties, bool with_offset) {
        const DiagonalHamiltonian d = diagonal_for(kind, g, penalties);
        const Statevector s = gammas.empty() ? Statevector::uniform(g.num_vertices())
                                             : run_qaoa(d, QaoaParams(gammas, betas));
        return expectation(s, d, with_offset);
      },
      py::arg("kind"), py::arg("graph"), py::arg("gammas"), py::arg("betas"),
      py::arg("penalties") = py::none(), py::arg("with_offset") = true);

  m.def(
      "optimize",
      [](const std::string& kind, const Graph& g, std::size_t layers,
         const PenaltyPair& penalties, std::size_t iterations, double learning_rate,
         const std::string& method, std::uint64_t seed) {
        OptimizerConfig c;
        c.iterations = iterations;
        c.learning_rate = learning_rate;
        c.method = parse_optimizer_method(method);
        c.seed = seed;
        const DiagonalHamiltonian d = diagonal_for(kind, g, penalties);
        const OptimizationResult r = [&] {
          py::gil_scoped_release release;
          return optimize(d, layers, c);
        }();
        std::vector<double> trace;
        for (const TraceEntry& e : r.trace.entries) trace.push_back(e.expectation_with_offset);
        py::dict out;
        out["gammas"] = r.best_params.gammas;
        out["betas"] = r.best_params.betas;
        out["expectation"] = r.best_expectation_with_offset;
        out["trace"] = to_array(trace);
        return out;
      },
      py::arg("kind"), py::arg("graph"), py::arg("layers"), py::arg("penalties") = py::none(),
      py::arg("iterations") = 200, py::arg("learning_rate") = 0.01,
      py::arg("method") = "rmsprop", py::arg("seed") = 0);

  m.def(
      "exact",
      [](const std::string& kind, const Graph& g) {
        const ExactResult r = exact_solve(parse_problem_kind(kind), g);
        return py::make_tuple(r.optimum, r.witness);
      },
      py::arg("kind"), py::arg("graph"), "(optimum, witness vertices).");

  m.def(
      "postprocess",
      [](const std::string& kind, const Graph& g,
         const py::array_t<double, py::array::c_style | py::array::forcecast>& probs) {
        return to_array(postprocess_distribution(g, parse_problem_kind(kind), from_array(probs)));
      },
      py::arg("kind"), py::arg("graph"), py::arg("probabilities"),
      "Push each outcome through the feasibility repair for a profit kind.");

  m.def(
      "summed_probabilities",
      [](const std::string& kind, const Graph& g,
         const py::array_t<double, py::array::c_style | py::array::forcecast>& probs) {
        const SolutionTiers t = enumerate_tiers(parse_problem_kind(kind), g);
        const std::vector<double> p = from_array(probs);
        return py::make_tuple(summed_probability(p, t, 0), summed_probability(p, t, 1),
                              summed_probability(p, t, 2));
      },
      py::arg("kind"), py::arg("graph"), py::arg("probabilities"));

  m.def("approximation_ratio", &approximation_ratio, py::arg("expectation_no_offset"),
        py::arg("offset"), py::arg("optimal_profit"));

  m.def(
      "penalty_anomaly",
      [](const Graph& g, double a, double b) {
        const PenaltyAnomaly r = detect_penalty_anomaly(g, Penalties(a, b));
        py::dict out;
        out["anomalous"] = r.anomalous;
        out["lowest_cost"] = r.lowest_cost;
        out["second_cost"] = r.second_cost;
        out["second_cost_states"] = r.second_cost_states;
        out["next_feasible_cost"] = r.next_feasible_cost;
        return out;
      },
      py::arg("graph"), py::arg("a") = 3.0, py::arg("b") = 2.0);
}
