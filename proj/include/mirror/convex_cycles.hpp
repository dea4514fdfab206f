#pragma once

#include <span>
#include <vector>

#include "mirror/graph.hpp"
#include "mirror/partial_cube.hpp"

namespace mirror {

// A convex cycle v_0 .. v_{2i-1} in canonical orientation: v_0 is the
// smallest vertex and v_1 the smaller of its two cycle neighbours.
struct ConvexCycle {
  std::vector<Vertex> vertices;
  // Classes of edges v_0v_1, ..., v_{i-1}v_i. Edge v_{t+i}v_{t+i+1} shares
  // the class of v_tv_{t+1}.
  std::vector<int> classes;

  int length() const { return static_cast<int>(vertices.size()); }
  int half_length() const { return static_cast<int>(classes.size()); }
  Vertex at(int t) const {
    const int len = length();
    return vertices[static_cast<std::size_t>(((t % len) + len) % len)];
  }
  // Class of edge v_t v_{t+1} (indices taken cyclically).
  int edge_class(int t) const {
    const int half = half_length();
    return classes[static_cast<std::size_t>((((t % half) + half) % half))];
  }
  bool crosses(int cls) const;

  friend bool operator==(const ConvexCycle& a, const ConvexCycle& b) { return a.vertices == b.vertices; }
  friend auto operator<=>(const ConvexCycle& a, const ConvexCycle& b) { return a.vertices <=> b.vertices; }
};

// Rotation/reflection of a cyclic vertex sequence that is lexicographically
// smallest.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);

// True iff no vertex outside S lies on a shortest path between two vertices of S.
bool is_convex(const Graph& g, std::span<const Vertex> vertices);

// Every convex cycle exactly once, sorted by canonical vertex sequence.
std::vector<ConvexCycle> enumerate_convex_cycles(const Graph& g, const ThetaEmbedding& e);

}  // namespace mirror
