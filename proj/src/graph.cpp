#include "mirror/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace mirror {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::vector<Edge> edges, GraphOptions options)
    : n_(n), edges_(std::move(edges)), options_(options),
      cache_(std::make_shared<DistanceCache>()) {
  if (n_ <= 0) throw ValidationError("graph must have at least one vertex");
  if (n_ > std::numeric_limits<Distance>::max())
    throw ValidationError("vertex count " + std::to_string(n_) + " exceeds 65535");

  for (auto& e : edges_) {
    if (e.u < 0 || e.v >= n_)
      throw ValidationError("edge " + to_string(e) + ": vertex id out of range 0.." +
                            std::to_string(n_ - 1));
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw ValidationError("duplicate edge " + to_string(*dup));

  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  auto reach = bfs_distances(n_, adjacency_, 0);
  for (int v = 0; v < n_; ++v) {
    if (reach[static_cast<std::size_t>(v)] < 0)
      throw ValidationError("vertex " + std::to_string(v) + " disconnected");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  Edge e(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

const std::vector<Distance>& Graph::distances() const {
  if (n_ > options_.max_dense_vertices)
    throw BudgetExceeded("dense distance matrix needs n <= " +
                         std::to_string(options_.max_dense_vertices) + ", graph has " +
                         std::to_string(n_) + " vertices");
  std::call_once(cache_->once, [this] {
    const auto n = static_cast<std::size_t>(n_);
    cache_->matrix.assign(n * n, 0);
    for (int s = 0; s < n_; ++s) {
      auto row = bfs_distances(n_, adjacency_, s);
      std::copy(row.begin(), row.end(),
                cache_->matrix.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(s) * n));
    }
  });
  return cache_->matrix;
}

int Graph::diameter() const {
  const auto& d = distances();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<int> bfs_distances(int n, std::span<const std::vector<Vertex>> adjacency,
                               Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : adjacency[static_cast<std::size_t>(x)]) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    adj[static_cast<std::size_t>(v)].assign(nb.begin(), nb.end());
  }
  return bfs_distances(g.num_vertices(), adj, source);
}

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<Distance>> out;
  out.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto row = g.distance_row(u);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::pair<std::vector<int>, std::optional<Edge>> two_colouring(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.num_vertices()), -1);
  std::deque<Vertex> queue{0};
  colour[0] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      auto& cy = colour[static_cast<std::size_t>(y)];
      if (cy < 0) {
        cy = 1 - colour[static_cast<std::size_t>(x)];
        queue.push_back(y);
      }
    }
  }
  for (const auto& e : g.edges()) {
    if (colour[static_cast<std::size_t>(e.u)] == colour[static_cast<std::size_t>(e.v)])
      return {std::move(colour), e};
  }
  return {std::move(colour), std::nullopt};
}

bool is_bipartite(const Graph& g) { return !two_colouring(g).second.has_value(); }

namespace {

Graph graph_from_json(const nlohmann::json& j, GraphOptions options) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph JSON: missing integer field \"n\"");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("graph JSON: missing array field \"edges\"");
  const auto n = j["n"].get<long long>();
  if (n <= 0 || n > std::numeric_limits<Distance>::max())
    throw ValidationError("graph JSON: n = " + std::to_string(n) + " out of range");
  std::vector<Edge> edges;
  edges.reserve(j["edges"].size());
  std::size_t idx = 0;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("graph JSON: edges[" + std::to_string(idx) +
                       "] is not a pair of integers");
    auto a = item[0].get<long long>();
    auto b = item[1].get<long long>();
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ValidationError("edges[" + std::to_string(idx) + "] = [" + std::to_string(a) +
                            "," + std::to_string(b) + "]: vertex id out of range 0.." +
                            std::to_string(n - 1));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++idx;
  }
  return Graph(static_cast<int>(n), std::move(edges), options);
}

}  // namespace

Graph load_graph(std::istream& in, GraphOptions options) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j, options);
}

Graph load_graph_string(const std::string& text, GraphOptions options) {
  std::istringstream in(text);
  return load_graph(in, options);
}

Graph load_graph_file(const std::string& path, GraphOptions options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_graph(in, options);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json j = {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
  return j.dump();
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int na = a.num_vertices();
  const int nb = b.num_vertices();
  auto id = [nb](Vertex x, Vertex y) { return x * nb + y; };
  std::vector<Edge> edges;
  for (const auto& e : a.edges())
    for (Vertex y = 0; y < nb; ++y) edges.emplace_back(id(e.u, y), id(e.v, y));
  for (Vertex x = 0; x < na; ++x)
    for (const auto& e : b.edges()) edges.emplace_back(id(x, e.u), id(x, e.v));
  return Graph(na * nb, std::move(edges), a.options());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> relabel(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    relabel[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int a = relabel[static_cast<std::size_t>(e.u)];
    int b = relabel[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges), g.options());
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph hypercube_graph(int d) {
  if (d < 0 || d > 15) throw ValidationError("hypercube dimension out of range");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < d; ++b)
      if (!(x & (1 << b))) edges.emplace_back(x, x | (1 << b));
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

}  // namespace mirror
