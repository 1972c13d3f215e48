#include "pfqaoa/postprocess.hpp"

#include <stdexcept>

namespace pfqaoa {

Assignment pc_to_vc(const Graph& g, const Assignment& subset) {
  if (subset.size() != g.num_vertices())
    throw std::invalid_argument("assignment length differs from vertex count");
  std::vector<std::size_t> uncovered(g.num_vertices(), 0);
  for (const Edge& e : g.edges())
    if (!subset.contains(e.u) && !subset.contains(e.v)) {
      ++uncovered[e.u];
      ++uncovered[e.v];
    }

  Assignment out = subset;
  for (const Edge& e : g.edges()) {
    if (out.contains(e.u) || out.contains(e.v)) continue;
    const Vertex pick = uncovered[e.v] > uncovered[e.u] ? e.v : e.u;
    out = out.with(pick);
    for (Vertex w : g.neighbors(pick))
      if (!out.contains(w)) {
        --uncovered[pick];
        --uncovered[w];
      }
  }
  return out;
}

Assignment pi_to_is(const Graph& g, const Assignment& subset) {
  if (subset.size() != g.num_vertices())
    throw std::invalid_argument("assignment length differs from vertex count");
  std::vector<std::size_t> conflicts(g.num_vertices(), 0);
  for (const Edge& e : g.edges())
    if (subset.contains(e.u) && subset.contains(e.v)) {
      ++conflicts[e.u];
      ++conflicts[e.v];
    }

  Assignment out = subset;
  for (const Edge& e : g.edges()) {
    if (!out.contains(e.u) || !out.contains(e.v)) continue;
    const Vertex drop = conflicts[e.v] > conflicts[e.u] ? e.v : e.u;
    out = out.without(drop);
    for (Vertex w : g.neighbors(drop))
      if (out.contains(w)) {
        --conflicts[drop];
        --conflicts[w];
      }
  }
  return out;
}

Assignment pcl_to_clique(const Graph& g, const Graph& complement_graph,
                         const Assignment& subset) {
  if (complement_graph.num_vertices() != g.num_vertices())
    throw std::invalid_argument("complement has a different vertex count");
  return pi_to_is(complement_graph, subset);
}

Assignment pcl_to_clique(const Graph& g, const Assignment& subset) {
  return pcl_to_clique(g, complement(g), subset);
}

Assignment to_feasible(ProblemKind kind, const Graph& g, const Assignment& subset) {
  switch (kind) {
    case ProblemKind::MinVC:
    case ProblemKind::MaxPC: return pc_to_vc(g, subset);
    case ProblemKind::MaxIS:
    case ProblemKind::MaxPI: return pi_to_is(g, subset);
    case ProblemKind::MaxCl:
    case ProblemKind::MaxPCl: return pcl_to_clique(g, subset);
  }
  return subset;
}

std::vector<double> postprocess_distribution(const Graph& g, ProblemKind kind,
                                             const std::vector<double>& probs) {
  const std::size_t n = g.num_vertices();
  if (probs.size() != (std::size_t{1} << n))
    throw std::invalid_argument("distribution size must be 2^n");
  const Graph conflict = uses_complement(kind) ? complement(g) : g;
  const bool cover = kind == ProblemKind::MinVC || kind == ProblemKind::MaxPC;

  std::vector<double> out(probs.size(), 0.0);
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    if (probs[x] == 0.0) continue;
    const Assignment in(n, x);
    const Assignment mapped = cover ? pc_to_vc(g, in) : pi_to_is(conflict, in);
    out[mapped.bits()] += probs[x];
  }
  return out;
}

}  // namespace pfqaoa
