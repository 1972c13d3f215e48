#include "doctest.h"

#include "pfqaoa/exact.hpp"
#include "support.hpp"

using namespace pfqaoa;

namespace {

Assignment as_subset(const Graph& g, const std::vector<Vertex>& vs) {
  return Assignment::from_vertices(g.num_vertices(), vs);
}

}  // namespace

TEST_CASE("brute force examples") {
  const Graph c5 = testing::cycle(5);
  CHECK(brute_force_optimum(ProblemKind::MinVC, c5).optimum == 3);
  CHECK(brute_force_optimum(ProblemKind::MaxPC, c5).optimum == 2);
  CHECK(brute_force_optimum(ProblemKind::MaxCl, Graph::complete(5)).optimum == 5);

  const BruteForceResult bf =
      brute_force(ProblemInstance(ProblemKind::MinVC, Graph::complete(3), Penalties(3, 2)));
  CHECK(bf.costs.size() == 8);
  CHECK(bf.min_cost == 4.0);
  CHECK(bf.minimizers == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
  CHECK(bf.best.optimum == 2);
  CHECK(bf.best.all_optima->size() == 3);

  CHECK_THROWS(brute_force_optimum(ProblemKind::MinVC, Graph::empty(21)));
}

TEST_CASE("LP kernelization") {
  SUBCASE("isolated vertices are removed") {
    const Kernel k = lp_kernelize(Graph(4, {{0, 1}}));
    CHECK(k.removed == std::vector<Vertex>{2, 3});
  }
  SUBCASE("C4 keeps every vertex at one half") {
    const Kernel k = lp_kernelize(testing::cycle(4));
    CHECK(k.forced_in.empty());
    CHECK(k.removed.empty());
    CHECK(k.graph == testing::cycle(4));
  }
  SUBCASE("a star forces its centre") {
    const Kernel k = lp_kernelize(testing::star(4));
    CHECK(k.forced_in == std::vector<Vertex>{0});
    CHECK(k.removed == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(k.graph.num_vertices() == 0);
  }
  SUBCASE("the kernel preserves the optimum") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = testing::random_graph(rng, 1 + trial % 14, testing::kDensities[trial % 4]);
      const Kernel k = lp_kernelize(g);
      CHECK(k.forced_in.size() + k.removed.size() + k.graph.num_vertices() == g.num_vertices());
      const long total = static_cast<long>(k.forced_in.size()) +
                         testing::oracle_optimum(ProblemKind::MinVC, k.graph);
      CHECK(total == testing::oracle_optimum(ProblemKind::MinVC, g));
    }
  }
}

TEST_CASE("greedy cover") {
  CHECK(greedy_vertex_cover(testing::star(4)) == std::vector<Vertex>{0});
  CHECK(greedy_vertex_cover(Graph::empty(5)).empty());
  // Ties go to the lowest index.
  CHECK(greedy_vertex_cover(Graph(2, {{0, 1}})) == std::vector<Vertex>{0});
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 14, testing::kDensities[trial % 4]);
    CHECK(is_vertex_cover(g, as_subset(g, greedy_vertex_cover(g))));
  }
}

TEST_CASE("bounded search tree") {
  const Graph k3 = Graph::complete(3);
  CHECK_FALSE(bounded_search_tree(k3, 1).has_value());
  const auto two = bounded_search_tree(k3, 2);
  REQUIRE(two.has_value());
  CHECK(two->size() == 2);
  CHECK(is_vertex_cover(k3, as_subset(k3, *two)));
  CHECK(bounded_search_tree(Graph::empty(4), 0).has_value());
  CHECK_FALSE(bounded_search_tree(Graph(2, {{0, 1}}), 0).has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 11, testing::kDensities[trial % 4]);
    const long opt = testing::oracle_optimum(ProblemKind::MinVC, g);
    for (long k = std::max(0L, opt - 2); k <= opt + 1; ++k) {
      const auto found = bounded_search_tree(g, static_cast<std::size_t>(k));
      CHECK(found.has_value() == (k >= opt));
      if (found) {
        CHECK(static_cast<long>(found->size()) <= k);
        CHECK(is_vertex_cover(g, as_subset(g, *found)));
      }
    }
  }
}

TEST_CASE("named instances") {
  CHECK(exact_min_vc(testing::petersen()).optimum == 6);
  CHECK(exact_min_vc(testing::complete_bipartite(3, 3)).optimum == 3);
  CHECK(exact_min_vc(testing::cycle(5)).optimum == 3);
  CHECK(exact_min_vc(Graph::complete(5)).optimum == 4);

  CHECK(exact_max_is(testing::cycle(5)).optimum == 2);
  CHECK(exact_max_clique(testing::cycle(5)).optimum == 2);
  CHECK(exact_max_is(Graph::complete(5)).optimum == 1);
  CHECK(exact_max_clique(Graph::complete(5)).optimum == 5);
  CHECK(exact_max_is(Graph::empty(6)).optimum == 6);
  CHECK(exact_max_clique(Graph::empty(6)).optimum == 1);
  CHECK(exact_min_vc(Graph::empty(0)).optimum == 0);
}

TEST_CASE("exact solvers match brute force and the chain identity") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 14;
    const Graph g = testing::random_graph(rng, n, testing::kDensities[trial % 4]);
    const Graph gc = complement(g);
    const long nv = static_cast<long>(n), ne = static_cast<long>(g.num_edges());
    CAPTURE(serialize_edge_list(g));

    const ExactResult vc = exact_min_vc(g);
    const long k = vc.optimum;
    CHECK(k == testing::oracle_optimum(ProblemKind::MinVC, g));
    CHECK(k == brute_force_optimum(ProblemKind::MinVC, g).optimum);
    CHECK(static_cast<long>(vc.witness.size()) == k);
    CHECK(is_vertex_cover(g, as_subset(g, vc.witness)));

    for (ProblemKind kind : kAllKinds) {
      const ExactResult r = exact_solve(kind, g);
      CHECK(r.kind == kind);
      CHECK(r.optimum == testing::oracle_optimum(kind, g));
      const Assignment w = as_subset(g, r.witness);
      CHECK(is_feasible(constrained_counterpart(kind), g, w));
      CHECK(objective_value(kind, g, w) == r.optimum);
    }

    CHECK(exact_max_is(g).optimum == nv - k);
    CHECK(exact_max_clique(gc).optimum == nv - k);
    CHECK(exact_solve(ProblemKind::MaxPC, g).optimum == ne - k);
    CHECK(exact_solve(ProblemKind::MaxPI, g).optimum == nv - k);
    CHECK(exact_solve(ProblemKind::MaxPCl, gc).optimum == nv - k);
  }
}
