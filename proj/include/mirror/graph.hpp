#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirror {

using Vertex = int;

// Undirected edge, always stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);  // "u-v"

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a dense structure would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Distance = std::uint16_t;

struct GraphOptions {
  // Largest n for which the dense distance matrix may be materialized.
  int max_dense_vertices = 5000;
};

// Immutable simple connected undirected graph on vertices 0..n-1.
//
// Connectivity and simplicity are validated at construction. The all-pairs
// distance matrix is computed on first use and then cached; the cache is
// guarded by a once-flag so a Graph can be shared between threads.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges, GraphOptions options = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_[static_cast<std::size_t>(v)]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }
  bool adjacent(Vertex u, Vertex v) const;

  // Index of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  Distance dist(Vertex u, Vertex v) const {
    const auto& d = distances();
    return d[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(v)];
  }
  // Row-major n*n matrix. Throws BudgetExceeded above the dense cap.
  const std::vector<Distance>& distances() const;
  std::span<const Distance> distance_row(Vertex u) const {
    return std::span<const Distance>(distances()).subspan(
        static_cast<std::size_t>(u) * static_cast<std::size_t>(n_),
        static_cast<std::size_t>(n_));
  }
  int diameter() const;

  const GraphOptions& options() const { return options_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  GraphOptions options_;

  struct DistanceCache {
    std::once_flag once;
    std::vector<Distance> matrix;
  };
  std::shared_ptr<DistanceCache> cache_;
};

// Hop distances from source by breadth-first search; -1 for unreachable.
std::vector<int> bfs_distances(int n, std::span<const std::vector<Vertex>> adjacency,
                               Vertex source);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g);

bool is_bipartite(const Graph& g);
// Two-colouring from vertex 0, or an edge whose endpoints share a colour.
std::pair<std::vector<int>, std::optional<Edge>> two_colouring(const Graph& g);

// Graph JSON: {"n": <int>, "edges": [[u,v], ...]}. Unknown keys are ignored.
Graph load_graph(std::istream& in, GraphOptions options = {});
Graph load_graph_string(const std::string& text, GraphOptions options = {});
Graph load_graph_file(const std::string& path, GraphOptions options = {});
std::string graph_to_json(const Graph& g);

// Common constructions used by the corpus and tests.
Graph cartesian_product(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph hypercube_graph(int d);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

}  // namespace mirror
