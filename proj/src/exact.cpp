#include "pfqaoa/exact.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "pfqaoa/hamiltonian.hpp"

namespace pfqaoa {

namespace {

void check_brute_force_size(const Graph& g) {
  if (g.num_vertices() > kBruteForceMaxVertices)
    throw ResourceError("brute force supports at most " +
                        std::to_string(kBruteForceMaxVertices) + " vertices");
}

bool maximizes(ProblemKind kind) { return kind != ProblemKind::MinVC; }

std::vector<Vertex> complement_of(std::size_t n, const std::vector<Vertex>& sorted) {
  std::vector<Vertex> out;
  std::size_t j = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (j < sorted.size() && sorted[j] == v) {
      ++j;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

ExactResult brute_force_optimum(ProblemKind kind, const Graph& g) {
  check_brute_force_size(g);
  const std::size_t n = g.num_vertices();
  const std::uint64_t dim = std::uint64_t{1} << n;
  const bool maximize = maximizes(kind);

  ExactResult result;
  result.kind = kind;
  result.optimum = maximize ? std::numeric_limits<long>::min()
                            : std::numeric_limits<long>::max();
  std::vector<std::uint64_t> optima;
  for (std::uint64_t mask = 0; mask < dim; ++mask) {
    const Assignment x(n, mask);
    if (!is_feasible(kind, g, x)) continue;
    const long value = objective_value(kind, g, x);
    const bool better = maximize ? value > result.optimum : value < result.optimum;
    if (better) {
      result.optimum = value;
      optima.clear();
    }
    if (value == result.optimum) optima.push_back(mask);
  }
  result.witness = Assignment(n, optima.front()).vertices();
  result.all_optima = std::move(optima);
  return result;
}

BruteForceResult brute_force(const ProblemInstance& instance) {
  const Graph& g = instance.graph();
  check_brute_force_size(g);
  const std::size_t n = g.num_vertices();
  const std::uint64_t dim = std::uint64_t{1} << n;

  BruteForceResult out;
  out.costs.resize(dim);
  out.min_cost = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < dim; ++mask) {
    const double c = qubo_cost(instance, Assignment(n, mask));
    out.costs[mask] = c;
    if (c < out.min_cost) {
      out.min_cost = c;
      out.minimizers.clear();
    }
    if (c == out.min_cost) out.minimizers.push_back(mask);
  }
  out.best = brute_force_optimum(instance.kind(), g);
  return out;
}

namespace {

// Hopcroft-Karp on the bipartite double cover: left copy u is adjacent to the
// right copy of every neighbour of u.
class DoubleCoverMatching {
 public:
  explicit DoubleCoverMatching(const Graph& g)
      : g_(g), n_(g.num_vertices()), match_left_(n_, kNone), match_right_(n_, kNone),
        dist_(n_) {
    while (bfs()) {
      for (Vertex u = 0; u < n_; ++u)
        if (match_left_[u] == kNone) dfs(u);
    }
  }

  // Koenig: Z = vertices reachable from free left vertices by alternating
  // paths; the minimum cover is (L \ Z) + (R & Z).
  void koenig_cover(std::vector<char>& left_in, std::vector<char>& right_in) const {
    std::vector<char> left_z(n_, 0), right_z(n_, 0);
    std::vector<Vertex> stack;
    for (Vertex u = 0; u < n_; ++u)
      if (match_left_[u] == kNone) {
        left_z[u] = 1;
        stack.push_back(u);
      }
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(u)) {
        if (right_z[w] || match_left_[u] == w) continue;
        right_z[w] = 1;
        Vertex next = match_right_[w];
        if (next != kNone && !left_z[next]) {
          left_z[next] = 1;
          stack.push_back(next);
        }
      }
    }
    left_in.assign(n_, 0);
    right_in.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      left_in[v] = !left_z[v];
      right_in[v] = right_z[v];
    }
  }

 private:
  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<Vertex> queue;
    for (Vertex u = 0; u < n_; ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found_free = false;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g_.neighbors(u)) {
        Vertex next = match_right_[w];
        if (next == kNone) {
          found_free = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[u] + 1;
          queue.push(next);
        }
      }
    }
    return found_free;
  }

  bool dfs(Vertex u) {
    for (Vertex w : g_.neighbors(u)) {
      Vertex next = match_right_[w];
      if (next == kNone || (dist_[next] == dist_[u] + 1 && dfs(next))) {
        match_left_[u] = w;
        match_right_[w] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_left_;
  std::vector<Vertex> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

Kernel lp_kernelize(const Graph& g) {
  std::vector<char> left_in, right_in;
  DoubleCoverMatching(g).koenig_cover(left_in, right_in);

  Kernel kernel{.forced_in = {}, .removed = {}, .graph = Graph::empty(0), .to_original = {}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    // LP value is (left_in + right_in) / 2.
    switch (left_in[v] + right_in[v]) {
      case 2: kernel.forced_in.push_back(v); break;
      case 0: kernel.removed.push_back(v); break;
      default: kernel.to_original.push_back(v); break;
    }
  }
  kernel.graph = induced_subgraph(g, kernel.to_original);
  return kernel;
}

std::vector<Vertex> greedy_vertex_cover(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> taken(n, 0);
  std::size_t edges_left = g.num_edges();
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<Vertex> cover;
  while (edges_left > 0) {
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v)
      if (deg[v] > deg[best]) best = v;
    cover.push_back(best);
    taken[best] = 1;
    edges_left -= deg[best];
    deg[best] = 0;
    for (Vertex w : g.neighbors(best))
      if (!taken[w]) --deg[w];
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g)
      : g_(g), removed_(g.num_vertices(), 0), deg_(g.num_vertices()),
        edges_left_(g.num_edges()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) deg_[v] = g.degree(v);
  }

  bool search(std::size_t budget) {
    if (edges_left_ == 0) return true;
    if (budget == 0) return false;

    Vertex hub = 0;
    std::size_t hub_deg = 0;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (!removed_[v] && deg_[v] > hub_deg) {
        hub = v;
        hub_deg = deg_[v];
      }
    // Every cover vertex covers at most deg(hub) remaining edges.
    if (edges_left_ > budget * hub_deg) return false;

    // Neighbours are sorted, so the smallest live one gives the hub's first
    // incident edge in canonical order.
    Vertex other = 0;
    for (Vertex w : g_.neighbors(hub))
      if (!removed_[w]) {
        other = w;
        break;
      }
    for (Vertex pick : {std::min(hub, other), std::max(hub, other)}) {
      take(pick);
      if (search(budget - 1)) return true;
      untake(pick);
    }
    return false;
  }

  std::vector<Vertex> chosen() const {
    std::vector<Vertex> out = chosen_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void take(Vertex v) {
    removed_[v] = 1;
    chosen_.push_back(v);
    edges_left_ -= deg_[v];
    for (Vertex w : g_.neighbors(v))
      if (!removed_[w]) --deg_[w];
  }

  void untake(Vertex v) {
    for (Vertex w : g_.neighbors(v))
      if (!removed_[w]) ++deg_[w];
    edges_left_ += deg_[v];
    chosen_.pop_back();
    removed_[v] = 0;
  }

  const Graph& g_;
  std::vector<char> removed_;
  std::vector<std::size_t> deg_;
  std::size_t edges_left_;
  std::vector<Vertex> chosen_;
};

std::vector<Vertex> lift(const Kernel& kernel, const std::vector<Vertex>& local) {
  std::vector<Vertex> out = kernel.forced_in;
  for (Vertex v : local) out.push_back(kernel.to_original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> bounded_search_tree(const Graph& g, std::size_t k) {
  CoverSearch search(g);
  if (!search.search(k)) return std::nullopt;
  return search.chosen();
}

ExactResult exact_min_vc(const Graph& g) {
  const Kernel kernel = lp_kernelize(g);
  const std::vector<Vertex> greedy = greedy_vertex_cover(kernel.graph);
  std::vector<Vertex> best = lift(kernel, greedy);

  // Budget shrinks by one per successful search; the first failure proves the
  // last success optimal.
  for (long budget = static_cast<long>(greedy.size()) - 1; budget >= 0; --budget) {
    auto found = bounded_search_tree(kernel.graph, static_cast<std::size_t>(budget));
    if (!found) break;
    best = lift(kernel, *found);
  }

  ExactResult result;
  result.kind = ProblemKind::MinVC;
  result.optimum = static_cast<long>(best.size());
  result.witness = std::move(best);
  return result;
}

ExactResult exact_max_is(const Graph& g) {
  const ExactResult cover = exact_min_vc(g);
  ExactResult result;
  result.kind = ProblemKind::MaxIS;
  result.witness = complement_of(g.num_vertices(), cover.witness);
  result.optimum = static_cast<long>(result.witness.size());
  return result;
}

ExactResult exact_max_clique(const Graph& g) {
  ExactResult result = exact_max_is(complement(g));
  result.kind = ProblemKind::MaxCl;
  return result;
}

ExactResult exact_solve(ProblemKind kind, const Graph& g) {
  ExactResult result;
  switch (kind) {
    case ProblemKind::MinVC: return exact_min_vc(g);
    case ProblemKind::MaxIS: return exact_max_is(g);
    case ProblemKind::MaxCl: return exact_max_clique(g);
    case ProblemKind::MaxPC:
      // A minimum cover of size k has profit |E| - k, the maximum possible.
      result = exact_min_vc(g);
      result.optimum = static_cast<long>(g.num_edges()) - result.optimum;
      break;
    case ProblemKind::MaxPI: result = exact_max_is(g); break;
    case ProblemKind::MaxPCl: result = exact_max_clique(g); break;
  }
  result.kind = kind;
  return result;
}

}  // namespace pfqaoa
