#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mirror/bitvec.hpp"
#include "mirror/graph.hpp"

namespace mirror {

class NotPartialCube : public std::runtime_error {
 public:
  enum class Reason { odd_cycle, isometry_violation, cut_violation };

  NotPartialCube(Reason reason, std::string message, std::pair<Vertex, Vertex> witness = {-1, -1},
                 int class_index = -1)
      : std::runtime_error(std::move(message)),
        reason_(reason),
        witness_(witness),
        class_index_(class_index) {}

  Reason reason() const { return reason_; }
  // Offending edge (odd_cycle) or vertex pair (isometry_violation).
  std::pair<Vertex, Vertex> witness() const { return witness_; }
  int class_index() const { return class_index_; }

 private:
  Reason reason_;
  std::pair<Vertex, Vertex> witness_;
  int class_index_;
};

const char* to_string(NotPartialCube::Reason r);

// Partition of E(G) into Theta*-classes. Edge indices refer to Graph::edges().
// Classes are numbered in order of their lexicographically smallest edge.
struct EdgePartition {
  int k = 0;
  std::vector<int> class_of;                 // per edge index
  std::vector<std::vector<int>> class_edges; // per class, sorted edge indices
};

// Raw Theta test on edges ab, xy: d(a,x) + d(b,y) != d(a,y) + d(b,x).
bool theta_related(const Graph& g, const Edge& ab, const Edge& xy);

// Theta* partition (transitive closure of the raw relation). Throws
// NotPartialCube(odd_cycle) on non-bipartite input.
EdgePartition theta_classes(const Graph& g);

struct HalfSpace {
  std::vector<Vertex> side[2];      // W: vertices whose class bit is 0 / 1
  std::vector<Vertex> boundary[2];  // U: side vertices with a neighbour across
};

struct ThetaEmbedding {
  int k = 0;
  std::vector<Edge> edges;  // same order as Graph::edges()
  std::vector<int> class_of;
  std::vector<std::vector<int>> class_edges;
  std::vector<BitVec> coords;  // per vertex, length k, coords[0] = 0
  std::vector<HalfSpace> halfspaces;

  int edge_class(const Graph& g, Vertex u, Vertex v) const {
    return class_of[static_cast<std::size_t>(g.edge_index(u, v))];
  }
  // Smallest edge of class i.
  const Edge& anchor_edge(int i) const {
    return edges[static_cast<std::size_t>(class_edges[static_cast<std::size_t>(i)].front())];
  }
};

// Hypercube embedding rooted at vertex 0 together with full verification of
// the isometry and cut properties. Throws NotPartialCube.
ThetaEmbedding embed(const Graph& g);

// coords -> vertex
using CoordinateIndex = std::unordered_map<BitVec, Vertex, BitVecHash>;
CoordinateIndex coordinate_index(const ThetaEmbedding& e);

// v -> vertex with complemented coordinates, when every vertex has one.
std::optional<std::vector<Vertex>> antipode_map(const ThetaEmbedding& e);

// True iff every vertex has an antipode at distance k. Adjacency preservation
// and the involution property are checked as well whenever the map is total.
bool is_harmonic_even(const Graph& g, const ThetaEmbedding& e);

// {w : d(u,w) + d(w,v) = d(u,v)}, ascending.
std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v);

}  // namespace mirror
