#pragma once

#include <cstdint>
#include <vector>

#include "mirror/coxeter.hpp"
#include "mirror/graph.hpp"

namespace mirror::testing {

// All-pairs distances by Floyd-Warshall.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

// Every induced cycle of length <= max_length that is convex, found by
// enumerating simple cycles. Each cycle is rotated to start at its smallest
// vertex and oriented towards the smaller neighbour.
std::vector<std::vector<Vertex>> brute_force_convex_cycles(const Graph& g, int max_length);

// Order of the group with presentation <s_i | (s_i s_j)^m_ij> by coset
// enumeration over the trivial subgroup. Returns 0 past max_cosets.
std::uint64_t coset_enumeration_order(const CoxeterMatrix& m, int max_cosets = 2'000'000);

}  // namespace mirror::testing
