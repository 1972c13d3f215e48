#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pfqaoa {

using Vertex = std::uint32_t;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// The edge list is normalized on construction (u < v, sorted, duplicates
/// merged), so iteration order is canonical and deterministic. Instances are
/// immutable.
class Graph {
 public:
  /// Throws GraphError on self-loops or endpoints >= n. The zero-vertex graph
  /// is allowed so that fully reduced kernels stay representable.
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph empty(std::size_t n) { return Graph(n, {}); }
  static Graph complete(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edge density |E| / C(n, 2); zero when n < 2.
  double density() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Graph on the same vertices whose edges are exactly the non-edges of g.
Graph complement(const Graph& g);

bool is_connected(const Graph& g);

/// Induced subgraph on `keep` (sorted, distinct), relabeled 0..keep.size()-1
/// in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

inline constexpr int kGeneratorMaxAttempts = 10000;

/// G(n, p) conditioned on connectivity by rejection sampling.
Graph gen_erdos_renyi_connected(std::size_t n, double p, std::uint64_t seed);

/// Connected simple d-regular graph from the configuration model, rejecting
/// pairings with loops, multi-edges, or more than one component.
Graph gen_regular(std::size_t n, std::size_t degree, std::uint64_t seed);

/// Edge-list text: first non-comment line is n, then one "u v" per line.
/// Lines starting with '#' are comments. Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace pfqaoa
