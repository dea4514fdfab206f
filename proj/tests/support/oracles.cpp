#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mirror::testing {

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) {
    d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<std::vector<Vertex>> brute_force_convex_cycles(const Graph& g, int max_length) {
  const auto d = floyd_warshall(g);
  const int n = g.num_vertices();
  auto convex_induced = [&](const std::vector<Vertex>& cyc) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (Vertex v : cyc) in[static_cast<std::size_t>(v)] = 1;
    int inner_edges = 0;
    for (const auto& e : g.edges())
      if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) ++inner_edges;
    if (inner_edges != static_cast<int>(cyc.size())) return false;
    for (Vertex a : cyc)
      for (Vertex b : cyc)
        for (Vertex w = 0; w < n; ++w) {
          if (in[static_cast<std::size_t>(w)]) continue;
          const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), uw = static_cast<std::size_t>(w);
          if (d[ua][uw] + d[uw][ub] == d[ua][ub]) return false;
        }
    return true;
  };

  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  // Cycles whose smallest vertex is `start`, each seen in both orientations.
  std::function<void(Vertex, Vertex)> walk = [&](Vertex start, Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (y < start) continue;
      if (y == start && path.size() >= 3) {
        if (path[1] < path.back() && convex_induced(path)) found.insert(path);
        continue;
      }
      if (on_path[static_cast<std::size_t>(y)] || static_cast<int>(path.size()) >= max_length) continue;
      on_path[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      walk(start, y);
      path.pop_back();
      on_path[static_cast<std::size_t>(y)] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = 1;
    walk(s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return {found.begin(), found.end()};
}

namespace {

// Coset table for a group generated by involutions; row[c][s] = c . s.
class CosetTable {
 public:
  CosetTable(int gens, int max_cosets) : gens_(gens), max_cosets_(max_cosets) { add_row(); }

  bool overflow() const { return overflow_; }
  int size() const { return static_cast<int>(table_.size()); }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& at(int c, int s) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]; }

  int live_count() const {
    int out = 0;
    for (int c = 0; c < size(); ++c) out += alive(c);
    return out;
  }

  void define(int c, int s) {
    if (size() >= max_cosets_) {
      overflow_ = true;
      return;
    }
    const int d = add_row();
    at(c, s) = d;
    at(d, s) = c;
  }

  // Traces the relator from both ends, defining one coset at a time until it closes.
  void scan_and_fill(int c, const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    int f = c, b = c, i = 0, j = len - 1;
    while (!overflow_) {
      while (i <= j && at(f, word[static_cast<std::size_t>(i)]) >= 0) f = at(f, word[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, word[static_cast<std::size_t>(j)]) >= 0) b = at(b, word[static_cast<std::size_t>(j--)]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, word[static_cast<std::size_t>(i)]) = b;
        at(b, word[static_cast<std::size_t>(i)]) = f;
        return;
      }
      define(f, word[static_cast<std::size_t>(i)]);
    }
  }

 private:
  int add_row() {
    table_.emplace_back(static_cast<std::size_t>(gens_), -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int e = queue[q];
      for (int s = 0; s < gens_; ++s) {
        const int f = at(e, s);
        if (f < 0) continue;
        at(f, s) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, s) >= 0) merge(f1, at(e1, s), queue);
        else if (at(f1, s) >= 0) merge(e1, at(f1, s), queue);
        else {
          at(e1, s) = f1;
          at(f1, s) = e1;
        }
      }
    }
  }

  int gens_;
  int max_cosets_;
  bool overflow_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

std::uint64_t coset_enumeration_order(const CoxeterMatrix& m, int max_cosets) {
  const int r = m.rank();
  std::vector<std::vector<int>> relators;
  for (int i = 0; i < r; ++i) relators.push_back({i, i});
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      std::vector<int> word;
      for (int t = 0; t < m(i, j); ++t) {
        word.push_back(i);
        word.push_back(j);
      }
      relators.push_back(std::move(word));
    }
  CosetTable table(r, max_cosets);
  for (int c = 0; c < table.size(); ++c) {
    for (const auto& rel : relators) {
      if (!table.alive(c)) break;
      table.scan_and_fill(c, rel);
      if (table.overflow()) return 0;
    }
    for (int s = 0; s < r && table.alive(c); ++s) {
      if (table.at(c, s) < 0) table.define(c, s);
      if (table.overflow()) return 0;
    }
  }
  return static_cast<std::uint64_t>(table.live_count());
}

}  // namespace mirror::testing
