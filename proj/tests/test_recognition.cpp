#include <doctest.h>

#include "mirror/certificate.hpp"
#include "mirror/convex_cycles.hpp"
#include "mirror/generate.hpp"
#include "mirror/oracle.hpp"
#include "mirror/recognition.hpp"
#include "support/corpus.hpp"
#include "support/invariants.hpp"

using namespace mirror;

namespace {

RejectStage stage_of(const Graph& g) {
  const auto r = recognize(g);
  REQUIRE_FALSE(accepted(r));
  return std::get<RejectReason>(r).stage;
}

MirrorCertificate certify(const Graph& g) {
  auto r = recognize(g);
  REQUIRE(accepted(r));
  return std::get<MirrorCertificate>(std::move(r));
}

}  // namespace

TEST_CASE("reject stages") {
  CHECK(stage_of(cycle_graph(5)) == RejectStage::not_bipartite);
  CHECK(stage_of(complete_bipartite_graph(2, 3)) == RejectStage::not_partial_cube);
  CHECK(stage_of(path_graph(4)) == RejectStage::not_harmonic_even);
  CHECK(stage_of(complete_bipartite_graph(1, 3)) == RejectStage::not_harmonic_even);
  CHECK(stage_of(cartesian_product(path_graph(3), path_graph(2))) == RejectStage::not_harmonic_even);
  for (int s = 0; s <= static_cast<int>(RejectStage::candidate_not_involutive_swap); ++s) {
    const auto stage = static_cast<RejectStage>(s);
    CHECK(reject_stage_from_string(to_string(stage)) == stage);
  }
  CHECK_FALSE(reject_stage_from_string("nonsense").has_value());
}

TEST_CASE("hypercubes have identity class permutations") {
  const auto c = certify(hypercube_graph(4));
  CHECK(c.embedding.k == 4);
  for (const auto& a : c.automorphisms)
    for (int j = 0; j < 4; ++j) CHECK(a.class_perm[static_cast<std::size_t>(j)] == j);
}

TEST_CASE("C6 reflection pairs the other two classes") {
  const Graph c6 = cycle_graph(6);
  const auto e = embed(c6);
  const auto cycles = enumerate_convex_cycles(c6, e);
  for (int i = 0; i < 3; ++i) {
    const auto pairing = candidate_class_permutation(e, cycles, i);
    REQUIRE(pairing.permutation.has_value());
    const auto& p = *pairing.permutation;
    CHECK(p[static_cast<std::size_t>(i)] == i);
    for (int j = 0; j < 3; ++j)
      if (j != i) CHECK(p[static_cast<std::size_t>(j)] != j);
  }
}

TEST_CASE("a candidate on a non-harmonic graph fails as an automorphism") {
  const Graph p4 = path_graph(4);
  const auto e = embed(p4);
  const auto r = build_candidate(p4, e, 0, {0, 1, 2});
  CHECK_FALSE(r.automorphism.has_value());
  REQUIRE(r.reject.has_value());
  CHECK(r.reject->stage == RejectStage::candidate_not_automorphism);
}

TEST_CASE("certificates verify and corruption is caught") {
  for (const char* name : {"Q3", "C8", "permutahedron", "prism6"}) {
    CAPTURE(name);
    const Graph g = named_example(name);
    const auto c = certify(g);
    CHECK(verify_certificate(g, c).ok);

    auto bad = c;
    auto& perm = bad.automorphisms[0].vertex_perm;
    std::swap(perm[0], perm[1]);
    CHECK_FALSE(verify_certificate(g, bad).ok);

    auto wrong_class = c;
    if (wrong_class.embedding.k > 1) {
      wrong_class.embedding.class_of[0] = (wrong_class.embedding.class_of[0] + 1) % wrong_class.embedding.k;
      CHECK_FALSE(verify_certificate(g, wrong_class).ok);
    }

    auto missing = c;
    missing.automorphisms.pop_back();
    CHECK_FALSE(verify_certificate(g, missing).ok);
  }
}

TEST_CASE("certificate JSON round trip") {
  const Graph g = named_example("permutahedron");
  const auto c = certify(g);
  const auto report = analyze_coxeter(g, c);
  const auto doc = certificate_to_json(g, c, &report);
  CHECK(doc.at("type") == "A3");
  CHECK(doc.at("order_check") == true);
  const auto back = certificate_from_json(g, doc);
  CHECK(verify_certificate(g, back).ok);
  CHECK(certificate_to_json(g, back, &report) == doc);

  const auto reject = std::get<RejectReason>(recognize(path_graph(4)));
  CHECK(reject_from_json(reject_to_json(reject)) == reject);
}

TEST_CASE("verdicts agree with the brute-force definition") {
  for (const auto& [name, g] : testing::small_corpus()) {
    CAPTURE(name);
    const auto r = recognize(g);
    CHECK(accepted(r) == oracle::brute_force_mirror(g).mirror);
  }
}

TEST_CASE("invariants on accepted graphs") {
  auto graphs = testing::small_corpus();
  for (auto& g : testing::cayley_corpus(200)) graphs.push_back(std::move(g));
  int accepted_count = 0;
  for (const auto& [name, g] : graphs) {
    const auto r = recognize(g);
    if (!accepted(r)) continue;
    ++accepted_count;
    const auto& c = std::get<MirrorCertificate>(r);
    for (const auto& check : testing::all_invariants(g, c)) {
      CAPTURE(name);
      CAPTURE(check.name);
      CAPTURE(check.detail);
      CHECK(check.ok);
    }
  }
  CHECK(accepted_count >= 20);
}
