#include "mirror/oracle.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mirror::oracle {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix distance_matrix(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  Matrix d;
  for (Vertex s = 0; s < g.num_vertices(); ++s) d.push_back(bfs_distances(g.num_vertices(), adj, s));
  return d;
}

// Sorted distance rows, interned so two graphs can compare profile ids.
struct Profiles {
  std::map<std::vector<int>, int> ids;
  std::vector<int> assign(const Matrix& d) {
    std::vector<int> out;
    for (auto row : d) {
      std::sort(row.begin(), row.end());
      out.push_back(ids.emplace(std::move(row), static_cast<int>(ids.size())).first->second);
    }
    return out;
  }
};

// Distance-preserving extension search from g1 onto g2. Between connected
// graphs a distance-preserving bijection is exactly an isomorphism.
class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, long long max_steps)
      : g1_(g1), g2_(g2), d1_(distance_matrix(g1)), d2_(distance_matrix(g2)), max_steps_(max_steps) {
    Profiles p;
    prof1_ = p.assign(d1_);
    prof2_ = p.assign(d2_);
    // Breadth-first order of g1 so every vertex after the first has a placed parent.
    const int n = g1.num_vertices();
    parent_.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t h = 0; h < order_.size(); ++h)
      for (Vertex y : g1.neighbors(order_[h]))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          parent_[static_cast<std::size_t>(y)] = order_[h];
          order_.push_back(y);
        }
    image_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(g2.num_vertices()), 0);
  }

  // Calls visit(image) for each complete match until it returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    if (g1_.num_vertices() != g2_.num_vertices() || g1_.num_edges() != g2_.num_edges()) return;
    auto a = prof1_, b = prof2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
    stop_ = false;
    extend(0, visit);
  }

 private:
  template <typename Visit>
  void extend(std::size_t t, Visit& visit) {
    if (t == order_.size()) {
      if (!visit(image_)) stop_ = true;
      return;
    }
    const Vertex v = order_[t];
    auto try_candidate = [&](Vertex w) {
      if (stop_ || used_[static_cast<std::size_t>(w)] ||
          prof2_[static_cast<std::size_t>(w)] != prof1_[static_cast<std::size_t>(v)])
        return;
      if (++steps_ > max_steps_) throw BudgetExceeded("isomorphism search exceeded its step budget");
      for (std::size_t s = 0; s < t; ++s) {
        const Vertex x = order_[s];
        if (d2_[static_cast<std::size_t>(w)][static_cast<std::size_t>(image_[static_cast<std::size_t>(x)])] !=
            d1_[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)])
          return;
      }
      image_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      extend(t + 1, visit);
      used_[static_cast<std::size_t>(w)] = 0;
      image_[static_cast<std::size_t>(v)] = -1;
    };
    if (t == 0) {
      for (Vertex w = 0; w < g2_.num_vertices() && !stop_; ++w) try_candidate(w);
    } else {
      const Vertex p = image_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      for (Vertex w : g2_.neighbors(p)) {
        if (stop_) break;
        try_candidate(w);
      }
    }
  }

  const Graph& g1_;
  const Graph& g2_;
  Matrix d1_, d2_;
  std::vector<int> prof1_, prof2_;
  std::vector<Vertex> order_, parent_;
  Permutation image_;
  std::vector<char> used_;
  long long steps_ = 0;
  long long max_steps_;
  bool stop_ = false;
};

}  // namespace

std::vector<Permutation> all_automorphisms(const Graph& g, const OracleBudget& budget) {
  if (g.num_vertices() > budget.max_vertices)
    throw BudgetExceeded("automorphism search limited to " + std::to_string(budget.max_vertices) + " vertices");
  std::vector<Permutation> out;
  Matcher matcher(g, g, std::numeric_limits<long long>::max());
  matcher.run([&](const Permutation& p) {
    if (static_cast<long long>(out.size()) >= budget.max_automorphisms)
      throw BudgetExceeded("more than " + std::to_string(budget.max_automorphisms) + " automorphisms");
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  if (out.size() <= 2000 && !is_group(out)) throw std::logic_error("automorphism list is not a group");
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[static_cast<std::size_t>(a[x])];
  return out;
}

bool is_group(const std::vector<Permutation>& perms) {
  if (perms.empty()) return false;
  std::vector<Permutation> sorted(perms);
  std::sort(sorted.begin(), sorted.end());
  auto contains = [&](const Permutation& p) { return std::binary_search(sorted.begin(), sorted.end(), p); };
  Permutation id(perms.front().size());
  std::iota(id.begin(), id.end(), 0);
  if (!contains(id)) return false;
  for (const auto& a : perms) {
    Permutation inv(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) inv[static_cast<std::size_t>(a[x])] = static_cast<Vertex>(x);
    if (!contains(inv)) return false;
    for (const auto& b : perms)
      if (!contains(compose(a, b))) return false;
  }
  return true;
}

BruteForceVerdict brute_force_mirror(const Graph& g, const MirrorBudget& budget) {
  const int n = g.num_vertices();
  if (n > budget.max_vertices)
    throw BudgetExceeded("brute-force mirror test limited to " + std::to_string(budget.max_vertices) + " vertices");
  const auto d = distance_matrix(g);
  const auto& edges = g.edges();
  const auto m = edges.size();

  // Theta* classes: closure of the raw distance relation.
  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
    return x;
  };
  auto dd = [&](Vertex a, Vertex b) { return d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& e = edges[a];
      const auto& f = edges[b];
      if (dd(e.u, f.u) + dd(e.v, f.v) != dd(e.u, f.v) + dd(e.v, f.u)) {
        int ra = find(static_cast<int>(a)), rb = find(static_cast<int>(b));
        if (ra != rb) root[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
    }
  BruteForceVerdict out;
  std::map<int, int> class_of_root;
  for (std::size_t e = 0; e < m; ++e) {
    auto [it, inserted] = class_of_root.emplace(find(static_cast<int>(e)), out.k);
    if (inserted) ++out.k;
    out.class_of.push_back(it->second);
  }

  const auto auts = all_automorphisms(g, {n, budget.max_automorphisms});
  out.swapping.resize(static_cast<std::size_t>(out.k));
  out.mirror_automorphism.resize(static_cast<std::size_t>(out.k));
  bool all = true;
  for (int i = 0; i < out.k; ++i) {
    // Components of G - E_i.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comps = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<Vertex> stack{s};
      comp[static_cast<std::size_t>(s)] = comps;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
          if (comp[static_cast<std::size_t>(y)] >= 0 ||
              out.class_of[static_cast<std::size_t>(g.edge_index(x, y))] == i)
            continue;
          comp[static_cast<std::size_t>(y)] = comps;
          stack.push_back(y);
        }
      }
      ++comps;
    }

    for (const auto& a : auts) {
      bool swaps = true;
      for (std::size_t e = 0; e < m && swaps; ++e) {
        if (out.class_of[e] != i) continue;
        swaps = a[static_cast<std::size_t>(edges[e].u)] == edges[e].v && a[static_cast<std::size_t>(edges[e].v)] == edges[e].u;
      }
      if (!swaps) continue;
      out.swapping[static_cast<std::size_t>(i)].push_back(a);
      if (comps != 2) continue;
      bool exchanges = true;
      for (Vertex x = 0; x < n && exchanges; ++x)
        exchanges = comp[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])] != comp[static_cast<std::size_t>(x)];
      if (exchanges && !out.mirror_automorphism[static_cast<std::size_t>(i)])
        out.mirror_automorphism[static_cast<std::size_t>(i)] = a;
    }
    if (!out.mirror_automorphism[static_cast<std::size_t>(i)]) all = false;
  }
  out.mirror = all;
  return out;
}

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2, const IsoBudget& budget) {
  if (std::max(g1.num_vertices(), g2.num_vertices()) > budget.max_vertices)
    throw BudgetExceeded("isomorphism search limited to " + std::to_string(budget.max_vertices) + " vertices");
  std::optional<Permutation> found;
  Matcher matcher(g1, g2, budget.max_steps);
  matcher.run([&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

}  // namespace mirror::oracle
