#include "pfqaoa/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "pfqaoa/random.hpp"

namespace pfqaoa {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
  for (Edge& e : edges) {
    if (e.u == e.v)
      throw GraphError("self-loop on vertex " + std::to_string(e.u));
    if (e.u >= n || e.v >= n)
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has an endpoint >= " +
                       std::to_string(n));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::density() const {
  if (n_ < 2) return 0.0;
  return static_cast<double>(edges_.size()) /
         (static_cast<double>(n_) * static_cast<double>(n_ - 1) / 2.0);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = 1;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == n;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i)
    relabel[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (relabel[e.u] != kAbsent && relabel[e.v] != kAbsent)
      edges.push_back({relabel[e.u], relabel[e.v]});
  return Graph(keep.size(), std::move(edges));
}

Graph gen_erdos_renyi_connected(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("Erdos-Renyi generator needs n >= 2");
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in (0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kGeneratorMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit_uniform(rng) < p) edges.push_back({u, v});
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw GraphError("no connected G(" + std::to_string(n) + ", " +
                   std::to_string(p) + ") sample after " +
                   std::to_string(kGeneratorMaxAttempts) + " attempts");
}

Graph gen_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("regular generator needs n >= 1");
  if (degree >= n)
    throw std::invalid_argument("degree must be smaller than n");
  if ((n * degree) % 2 != 0)
    throw std::invalid_argument("n * degree must be even");

  Rng rng(seed);
  std::vector<Vertex> points(n * degree);
  for (int attempt = 0; attempt < kGeneratorMaxAttempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i)
      points[i] = static_cast<Vertex>(i / degree);
    for (std::size_t i = points.size(); i > 1; --i)
      std::swap(points[i - 1], points[uniform_index(rng, i)]);

    std::vector<Edge> edges;
    edges.reserve(points.size() / 2);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      Vertex u = points[i], v = points[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw GraphError("no connected simple " + std::to_string(degree) +
                   "-regular graph on " + std::to_string(n) +
                   " vertices after " + std::to_string(kGeneratorMaxAttempts) +
                   " attempts");
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

// Splits on blanks and parses every token as an unsigned integer.
bool parse_uints(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    std::size_t end = static_cast<std::size_t>(ptr - line.data());
    if (end < line.size() && line[end] != ' ' && line[end] != '\t') return false;
    out.push_back(value);
    pos = end;
  }
  return true;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw GraphError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> fields;
  std::size_t line_no = 0;

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!parse_uints(line, fields)) parse_fail(line_no, "malformed line");

    if (!have_header) {
      if (fields.size() != 1 || fields[0] == 0)
        parse_fail(line_no, "expected a positive vertex count");
      n = fields[0];
      have_header = true;
      continue;
    }
    if (fields.size() != 2) parse_fail(line_no, "expected \"u v\"");
    if (fields[0] >= n || fields[1] >= n)
      parse_fail(line_no, "endpoint >= vertex count " + std::to_string(n));
    if (fields[0] == fields[1]) parse_fail(line_no, "self-loop");
    edges.push_back({static_cast<Vertex>(fields[0]),
                     static_cast<Vertex>(fields[1])});
  }
  if (!have_header) throw GraphError("missing vertex count");
  return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list(buf.str());
  } catch (const GraphError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GraphError("cannot write " + path);
  out << serialize_edge_list(g);
}

}  // namespace pfqaoa
