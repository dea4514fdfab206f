#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mirror/bitvec.hpp"
#include "mirror/convex_cycles.hpp"
#include "mirror/graph.hpp"
#include "mirror/partial_cube.hpp"

namespace mirror {

// The reflection of G across one Theta-class, in vertex and hypercube form:
// coords[vertex_perm[x]] bit class_perm[j] == coords[x] bit j ^ flip_mask bit class_perm[j].
struct MirrorAutomorphism {
  int class_index = 0;
  std::vector<int> class_perm;
  BitVec flip_mask;
  std::vector<Vertex> vertex_perm;
};

struct MirrorCertificate {
  ThetaEmbedding embedding;
  std::vector<MirrorAutomorphism> automorphisms;  // indexed by class
  std::vector<ConvexCycle> convex_cycles;
};

enum class RejectStage {
  not_bipartite,
  not_partial_cube,
  not_harmonic_even,
  class_pairing_conflict,
  class_pairing_incomplete,
  candidate_not_automorphism,
  candidate_not_involutive_swap,
};

const char* to_string(RejectStage s);
std::optional<RejectStage> reject_stage_from_string(const std::string& s);

// Why a graph is not a mirror graph. Unused witness fields stay at -1/empty.
struct RejectReason {
  RejectStage stage = RejectStage::not_bipartite;
  std::string message;
  int class_index = -1;
  int other_class = -1;
  std::optional<Edge> edge;
  std::optional<std::pair<Vertex, Vertex>> vertices;
  std::vector<std::vector<Vertex>> cycles;

  friend bool operator==(const RejectReason&, const RejectReason&) = default;
};

// Outcome of the class-pairing step for one class.
struct ClassPairing {
  std::optional<std::vector<int>> permutation;
  std::optional<RejectReason> reject;
};

// Image of every Theta-class under the reflection across class i, read off
// from the convex cycles crossed by class i.
ClassPairing candidate_class_permutation(const ThetaEmbedding& e, const std::vector<ConvexCycle>& cycles,
                                         int class_index);

struct CandidateResult {
  std::optional<MirrorAutomorphism> automorphism;
  std::optional<RejectReason> reject;
};

// The unique automorphism permuting classes by `class_perm` and swapping the
// endpoints of the smallest edge of class i, verified against the graph.
CandidateResult build_candidate(const Graph& g, const ThetaEmbedding& e, const CoordinateIndex& index,
                                int class_index, const std::vector<int>& class_perm);
CandidateResult build_candidate(const Graph& g, const ThetaEmbedding& e, int class_index,
                                const std::vector<int>& class_perm);

using Recognition = std::variant<MirrorCertificate, RejectReason>;

Recognition recognize(const Graph& g);

inline bool accepted(const Recognition& r) { return std::holds_alternative<MirrorCertificate>(r); }

struct VerifyResult {
  bool ok = true;
  std::string failure;  // first failing invariant
  explicit operator bool() const { return ok; }
};

// Re-derives the metric and Theta relation from scratch and checks every
// certificate invariant. Shares no code path with recognize().
VerifyResult verify_certificate(const Graph& g, const MirrorCertificate& c);

}  // namespace mirror
