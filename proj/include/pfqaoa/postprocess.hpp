#pragma once

#include <vector>

#include "pfqaoa/graph.hpp"
#include "pfqaoa/problems.hpp"

namespace pfqaoa {

/// Profit cover -> vertex cover. Walks the uncovered edges in canonical order
/// and, for each edge still uncovered, adds the endpoint that covers more of
/// the remaining uncovered edges (lower index on ties). O(|E|).
Assignment pc_to_vc(const Graph& g, const Assignment& subset);

/// Profit independence -> independent set. Walks the conflict edges in
/// canonical order and, for each edge whose endpoints are both still selected,
/// drops the endpoint with more remaining conflicts (lower index on ties).
Assignment pi_to_is(const Graph& g, const Assignment& subset);

/// Profit clique -> clique: pi_to_is on the complement.
Assignment pcl_to_clique(const Graph& g, const Assignment& subset);
/// Same, with a precomputed complement.
Assignment pcl_to_clique(const Graph& g, const Graph& complement_graph,
                         const Assignment& subset);

/// Conversion matching the constraint family of `kind` (MinVC/MaxPC -> cover,
/// MaxIS/MaxPI -> independent set, MaxCl/MaxPCl -> clique).
Assignment to_feasible(ProblemKind kind, const Graph& g, const Assignment& subset);

/// Maps every basis state through to_feasible and sums the probability of
/// states with the same image. `probs` has 2^n entries.
std::vector<double> postprocess_distribution(const Graph& g, ProblemKind kind,
                                             const std::vector<double>& probs);

}  // namespace pfqaoa
