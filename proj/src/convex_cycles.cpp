#include "mirror/convex_cycles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mirror {

bool ConvexCycle::crosses(int cls) const {
  return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  std::vector<Vertex> best;
  for (std::size_t start = 0; start < len; ++start) {
    for (int dir : {1, -1}) {
      std::vector<Vertex> candidate(len);
      for (std::size_t t = 0; t < len; ++t) {
        auto offset = static_cast<std::ptrdiff_t>(start) + dir * static_cast<std::ptrdiff_t>(t);
        auto idx = static_cast<std::size_t>(((offset % static_cast<std::ptrdiff_t>(len)) +
                                             static_cast<std::ptrdiff_t>(len)) %
                                            static_cast<std::ptrdiff_t>(len));
        candidate[t] = cycle[idx];
      }
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

bool is_convex(const Graph& g, std::span<const Vertex> vertices) {
  const int n = g.num_vertices();
  std::vector<char> inside(static_cast<std::size_t>(n), 0);
  for (Vertex v : vertices) inside[static_cast<std::size_t>(v)] = 1;

  // A shortest path that leaves S does so through a neighbour of S, and that
  // neighbour is itself on a shortest path; only the frontier needs checking.
  std::vector<Vertex> frontier;
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v))
      if (!inside[static_cast<std::size_t>(w)] && !queued[static_cast<std::size_t>(w)]) {
        queued[static_cast<std::size_t>(w)] = 1;
        frontier.push_back(w);
      }

  for (std::size_t a = 0; a < vertices.size(); ++a) {
    auto row_x = g.distance_row(vertices[a]);
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const Vertex y = vertices[b];
      const int dxy = row_x[static_cast<std::size_t>(y)];
      for (Vertex w : frontier)
        if (row_x[static_cast<std::size_t>(w)] + g.dist(w, y) == dxy) return false;
    }
  }
  return true;
}

namespace {

// Neighbours of x that are one step closer to target.
int count_closer(const Graph& g, Vertex x, Vertex target, int d) {
  auto row = g.distance_row(target);
  int c = 0;
  for (Vertex w : g.neighbors(x))
    if (row[static_cast<std::size_t>(w)] == d - 1) ++c;
  return c;
}

// Orders the interval as a cycle if it induces one; empty otherwise.
std::vector<Vertex> as_cycle(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<char> inside(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : set) inside[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : set) {
    int deg = 0;
    for (Vertex w : g.neighbors(v)) deg += inside[static_cast<std::size_t>(w)];
    if (deg != 2) return {};
  }
  std::vector<Vertex> order{set.front()};
  Vertex prev = -1;
  Vertex cur = set.front();
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (inside[static_cast<std::size_t>(w)] && w != prev) {
        next = w;
        break;
      }
    if (next == set.front()) break;
    order.push_back(next);
    prev = cur;
    cur = next;
    if (order.size() > set.size()) return {};
  }
  if (order.size() != set.size()) return {};
  return order;
}

}  // namespace

std::vector<ConvexCycle> enumerate_convex_cycles(const Graph& g, const ThetaEmbedding& e) {
  const int n = g.num_vertices();
  std::map<std::vector<Vertex>, bool> seen;  // canonical form -> convex

  for (Vertex u = 0; u < n; ++u) {
    auto row_u = g.distance_row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = row_u[static_cast<std::size_t>(v)];
      if (d < 2) continue;
      // On a 2d-cycle interval both ends have exactly two neighbours inside.
      if (count_closer(g, u, v, d) != 2 || count_closer(g, v, u, d) != 2) continue;
      auto members = interval(g, u, v);
      if (static_cast<int>(members.size()) != 2 * d) continue;
      auto order = as_cycle(g, members);
      if (order.empty()) continue;
      auto canon = canonical_cycle(order);
      if (seen.contains(canon)) continue;
      seen.emplace(std::move(canon), is_convex(g, members));
    }
  }

  std::vector<ConvexCycle> out;
  for (auto& [verts, convex] : seen) {
    if (!convex) continue;
    ConvexCycle c;
    c.vertices = verts;
    const int half = c.length() / 2;
    for (int t = 0; t < half; ++t) {
      const int cls = e.edge_class(g, c.at(t), c.at(t + 1));
      if (cls != e.edge_class(g, c.at(t + half), c.at(t + half + 1)))
        throw std::logic_error("convex cycle with non-Theta antipodal edges");
      c.classes.push_back(cls);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mirror
