#include "mirror/partial_cube.hpp"

#include <algorithm>
#include <numeric>

namespace mirror {

const char* to_string(NotPartialCube::Reason r) {
  switch (r) {
    case NotPartialCube::Reason::odd_cycle: return "odd-cycle";
    case NotPartialCube::Reason::isometry_violation: return "isometry-violation";
    case NotPartialCube::Reason::cut_violation: return "cut-violation";
  }
  return "unknown";
}

bool theta_related(const Graph& g, const Edge& ab, const Edge& xy) {
  return g.dist(ab.u, xy.u) + g.dist(ab.v, xy.v) != g.dist(ab.u, xy.v) + g.dist(ab.v, xy.u);
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

EdgePartition theta_classes(const Graph& g) {
  if (auto [colour, bad] = two_colouring(g); bad)
    throw NotPartialCube(NotPartialCube::Reason::odd_cycle,
                         "odd cycle through edge " + to_string(*bad), {bad->u, bad->v});

  const auto& edges = g.edges();
  const int m = g.num_edges();
  const int n = g.num_vertices();
  DisjointSets sets(m);
  // In a bipartite graph d(a,x) - d(b,x) is +1 or -1, so ab Theta xy exactly
  // when x and y fall on different sides of that sign.
  std::vector<signed char> side(static_cast<std::size_t>(n));
  for (int e = 0; e < m; ++e) {
    auto row_a = g.distance_row(edges[static_cast<std::size_t>(e)].u);
    auto row_b = g.distance_row(edges[static_cast<std::size_t>(e)].v);
    for (int x = 0; x < n; ++x)
      side[static_cast<std::size_t>(x)] =
          row_a[static_cast<std::size_t>(x)] < row_b[static_cast<std::size_t>(x)] ? 0 : 1;
    for (int f = e + 1; f < m; ++f) {
      const auto& xy = edges[static_cast<std::size_t>(f)];
      if (side[static_cast<std::size_t>(xy.u)] != side[static_cast<std::size_t>(xy.v)])
        sets.unite(e, f);
    }
  }

  EdgePartition out;
  out.class_of.assign(static_cast<std::size_t>(m), -1);
  std::vector<int> class_of_root(static_cast<std::size_t>(m), -1);
  for (int e = 0; e < m; ++e) {
    auto& c = class_of_root[static_cast<std::size_t>(sets.find(e))];
    if (c < 0) {
      c = out.k++;
      out.class_edges.emplace_back();
    }
    out.class_of[static_cast<std::size_t>(e)] = c;
    out.class_edges[static_cast<std::size_t>(c)].push_back(e);
  }
  return out;
}

ThetaEmbedding embed(const Graph& g) {
  auto partition = theta_classes(g);
  const int n = g.num_vertices();

  ThetaEmbedding emb;
  emb.k = partition.k;
  emb.edges = g.edges();
  emb.class_of = std::move(partition.class_of);
  emb.class_edges = std::move(partition.class_edges);
  emb.coords.assign(static_cast<std::size_t>(n), BitVec(emb.k));

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      auto& cy = emb.coords[static_cast<std::size_t>(y)];
      cy = emb.coords[static_cast<std::size_t>(x)];
      cy.flip(emb.edge_class(g, x, y));
      queue.push_back(y);
    }
  }

  for (std::size_t idx = 0; idx < emb.edges.size(); ++idx) {
    const auto& e = emb.edges[idx];
    auto diff = emb.coords[static_cast<std::size_t>(e.u)] ^ emb.coords[static_cast<std::size_t>(e.v)];
    if (diff.count() != 1 || !diff.test(emb.class_of[idx]))
      throw NotPartialCube(NotPartialCube::Reason::isometry_violation,
                           "coordinates of edge " + to_string(e) + " differ in " +
                               std::to_string(diff.count()) + " classes",
                           {e.u, e.v});
  }

  for (Vertex u = 0; u < n; ++u) {
    auto row = g.distance_row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      int h = hamming(emb.coords[static_cast<std::size_t>(u)], emb.coords[static_cast<std::size_t>(v)]);
      if (h != row[static_cast<std::size_t>(v)])
        throw NotPartialCube(NotPartialCube::Reason::isometry_violation,
                             "vertices " + std::to_string(u) + "," + std::to_string(v) +
                                 ": Hamming distance " + std::to_string(h) + " != graph distance " +
                                 std::to_string(row[static_cast<std::size_t>(v)]),
                             {u, v});
    }
  }

  // Each class must be a cut with exactly two connected sides.
  emb.halfspaces.resize(static_cast<std::size_t>(emb.k));
  std::vector<int> component(static_cast<std::size_t>(n));
  for (int i = 0; i < emb.k; ++i) {
    std::fill(component.begin(), component.end(), -1);
    const auto& anchor = emb.anchor_edge(i);
    int label = 0;
    for (Vertex start : {anchor.u, anchor.v}) {
      std::vector<Vertex> stack{start};
      component[static_cast<std::size_t>(start)] = label;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
          if (component[static_cast<std::size_t>(y)] >= 0 || emb.edge_class(g, x, y) == i) continue;
          component[static_cast<std::size_t>(y)] = label;
          stack.push_back(y);
        }
      }
      ++label;
    }
    const bool anchor_bit = emb.coords[static_cast<std::size_t>(anchor.u)].test(i);
    auto& hs = emb.halfspaces[static_cast<std::size_t>(i)];
    for (Vertex x = 0; x < n; ++x) {
      const bool bit = emb.coords[static_cast<std::size_t>(x)].test(i);
      const int expected = bit == anchor_bit ? 0 : 1;
      if (component[static_cast<std::size_t>(x)] != expected)
        throw NotPartialCube(NotPartialCube::Reason::cut_violation,
                             "class " + std::to_string(i) + " is not a two-sided cut (vertex " +
                                 std::to_string(x) + ")",
                             {x, -1}, i);
      hs.side[bit ? 1 : 0].push_back(x);
    }
    for (int idx : emb.class_edges[static_cast<std::size_t>(i)]) {
      const auto& e = emb.edges[static_cast<std::size_t>(idx)];
      for (Vertex x : {e.u, e.v})
        hs.boundary[emb.coords[static_cast<std::size_t>(x)].test(i) ? 1 : 0].push_back(x);
    }
    for (auto& b : hs.boundary) std::sort(b.begin(), b.end());
  }
  return emb;
}

CoordinateIndex coordinate_index(const ThetaEmbedding& e) {
  CoordinateIndex index;
  index.reserve(e.coords.size());
  for (std::size_t v = 0; v < e.coords.size(); ++v) index.emplace(e.coords[v], static_cast<Vertex>(v));
  return index;
}

std::optional<std::vector<Vertex>> antipode_map(const ThetaEmbedding& e) {
  auto index = coordinate_index(e);
  std::vector<Vertex> anti(e.coords.size());
  for (std::size_t v = 0; v < e.coords.size(); ++v) {
    auto it = index.find(e.coords[v].complement());
    if (it == index.end()) return std::nullopt;
    anti[v] = it->second;
  }
  return anti;
}

bool is_harmonic_even(const Graph& g, const ThetaEmbedding& e) {
  auto anti = antipode_map(e);
  if (!anti) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Vertex a = (*anti)[static_cast<std::size_t>(v)];
    if ((*anti)[static_cast<std::size_t>(a)] != v) return false;
  }
  for (const auto& edge : g.edges()) {
    if (!g.adjacent((*anti)[static_cast<std::size_t>(edge.u)], (*anti)[static_cast<std::size_t>(edge.v)]))
      return false;
  }
  return true;
}

std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v) {
  auto du = g.distance_row(u);
  auto dv = g.distance_row(v);
  const int d = du[static_cast<std::size_t>(v)];
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.num_vertices(); ++w)
    if (du[static_cast<std::size_t>(w)] + dv[static_cast<std::size_t>(w)] == d) out.push_back(w);
  return out;
}

}  // namespace mirror
