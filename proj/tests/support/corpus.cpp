#include "corpus.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "mirror/coxeter.hpp"
#include "mirror/generate.hpp"

namespace mirror::testing {

namespace {

Graph tree(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) out.emplace_back(a, b);
  return Graph(n, std::move(out));
}

bool isometric_in_cube(const Graph& g, const std::vector<Vertex>& labels) {
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    const auto d = bfs_distances(g, s);
    for (Vertex t = 0; t < g.num_vertices(); ++t)
      if (d[static_cast<std::size_t>(t)] !=
          std::popcount(static_cast<unsigned>(labels[static_cast<std::size_t>(s)] ^ labels[static_cast<std::size_t>(t)])))
        return false;
  }
  return true;
}

}  // namespace

std::vector<NamedGraph> random_subcubes(int d, int count, unsigned long long seed) {
  const Graph cube = hypercube_graph(d);
  const int n = cube.num_vertices();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(4, n - 2);
  std::set<std::vector<Vertex>> seen;
  std::vector<NamedGraph> out;
  for (int attempt = 0; attempt < 100000 && static_cast<int>(out.size()) < count; ++attempt) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size(rng)));
    std::sort(all.begin(), all.end());
    if (all.front() != 0 || seen.count(all)) continue;
    try {
      Graph sub = induced_subgraph(cube, all);
      if (!isometric_in_cube(sub, all)) continue;
      seen.insert(all);
      out.push_back({"subcube" + std::to_string(out.size()) + "_n" + std::to_string(all.size()), std::move(sub)});
    } catch (const ValidationError&) {
      // disconnected sample
    }
  }
  return out;
}

std::vector<NamedGraph> small_corpus() {
  std::vector<NamedGraph> out;
  for (int d = 1; d <= 4; ++d) out.push_back({"Q" + std::to_string(d), hypercube_graph(d)});
  for (int n = 4; n <= 16; n += 2) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (int n : {3, 5, 7}) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (int n = 3; n <= 6; ++n) out.push_back({"P" + std::to_string(n), path_graph(n)});
  out.push_back({"star3", complete_bipartite_graph(1, 3)});
  out.push_back({"star5", complete_bipartite_graph(1, 5)});
  out.push_back({"spider", tree(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})});
  out.push_back({"binary_tree", tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}})});
  out.push_back({"K23", complete_bipartite_graph(2, 3)});
  out.push_back({"K33", complete_bipartite_graph(3, 3)});
  out.push_back({"K4", complete_graph(4)});
  out.push_back({"prism6", cartesian_product(cycle_graph(6), path_graph(2))});
  out.push_back({"prism8", cartesian_product(cycle_graph(8), path_graph(2))});
  out.push_back({"ladder3", cartesian_product(path_graph(3), path_graph(2))});
  out.push_back({"grid3x3", cartesian_product(path_graph(3), path_graph(3))});
  out.push_back({"C4xP3", cartesian_product(cycle_graph(4), path_graph(3))});
  for (auto& g : random_subcubes(4, 8, 20261015)) out.push_back(std::move(g));
  return out;
}

std::vector<std::string> round_trip_types() {
  std::vector<std::string> out{"A1", "A2", "A3", "A4", "B2", "B3", "D4", "F4", "H3"};
  for (int m = 3; m <= 12; ++m) out.push_back("I2(" + std::to_string(m) + ")");
  for (int d = 2; d <= 6; ++d) out.push_back("A1^" + std::to_string(d));
  out.push_back("A2 x A1");
  out.push_back("I2(4) x A1");
  return out;
}

std::vector<NamedGraph> cayley_corpus(int max_n) {
  std::vector<NamedGraph> out;
  for (const auto& name : round_trip_types()) {
    const auto type = parse_coxeter_type(name);
    if (type.predicted_order > static_cast<std::uint64_t>(max_n)) continue;
    out.push_back({name, generate_cayley(standard_matrix(type))});
  }
  return out;
}

}  // namespace mirror::testing
