#pragma once

#include <optional>
#include <vector>

#include "mirror/graph.hpp"

// Brute-force ground truth for small graphs. Nothing here depends on the
// partial-cube or recognition code.
namespace mirror::oracle {

using Permutation = std::vector<Vertex>;

struct OracleBudget {
  int max_vertices = 100;
  long long max_automorphisms = 1'000'000;
};

// Every automorphism of g (identity first), by distance-preserving
// backtracking. Throws BudgetExceeded.
std::vector<Permutation> all_automorphisms(const Graph& g, const OracleBudget& budget = {});

// (a*b)[x] = b[a[x]]: apply a first.
Permutation compose(const Permutation& a, const Permutation& b);

// True iff the list contains the identity and is closed under composition and inverse.
bool is_group(const std::vector<Permutation>& perms);

struct MirrorBudget {
  int max_vertices = 16;
  long long max_automorphisms = 10'000;
};

struct BruteForceVerdict {
  bool mirror = false;
  int k = 0;
  std::vector<int> class_of;  // Theta*-class per edge of g.edges()
  // Per class, every automorphism swapping the ends of each edge in the class.
  std::vector<std::vector<Permutation>> swapping;
  // Per class, the automorphism meeting both definition conditions, if any.
  std::vector<std::optional<Permutation>> mirror_automorphism;
};

// Tests the Theta*-partition against the literal mirror-partition definition
// over the full automorphism list.
BruteForceVerdict brute_force_mirror(const Graph& g, const MirrorBudget& budget = {});

struct IsoBudget {
  int max_vertices = 2000;
  long long max_steps = 50'000'000;
};

// Bijection f with {u,v} in E(g1) iff {f(u),f(v)} in E(g2), if one exists.
std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2, const IsoBudget& budget = {});

}  // namespace mirror::oracle
