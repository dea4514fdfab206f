#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mirror/certificate.hpp"
#include "mirror/coxeter.hpp"
#include "mirror/generate.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mirror;

TEST_CASE("matrix validation") {
  CHECK_NOTHROW(CoxeterMatrix({{1, 3}, {3, 1}}));
  CHECK_THROWS_AS(CoxeterMatrix({{1, 3}, {4, 1}}), ValidationError);
  CHECK_THROWS_AS(CoxeterMatrix({{2, 3}, {3, 1}}), ValidationError);
  CHECK_THROWS_AS(CoxeterMatrix({{1, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(CoxeterMatrix({{1, 3}}), ValidationError);
}

TEST_CASE("classification of small matrices") {
  auto type_of = [](std::vector<std::vector<int>> m) { return classify(CoxeterMatrix(std::move(m))); };
  CHECK(type_of({{1, 5}, {5, 1}}).name() == "I2(5)");
  CHECK(type_of({{1, 5}, {5, 1}}).predicted_order == 10);
  CHECK(type_of({{1, 7}, {7, 1}}).predicted_order == 14);
  CHECK(type_of({{1, 6}, {6, 1}}).name() == "I2(6)");
  CHECK(type_of({{1, 6}, {6, 1}}).predicted_order == 12);
  CHECK(type_of({{1, 3}, {3, 1}}).name() == "A2");
  CHECK(type_of({{1, 4}, {4, 1}}).name() == "B2");
  const auto h3 = type_of({{1, 3, 2}, {3, 1, 5}, {2, 5, 1}});
  CHECK(h3.name() == "H3");
  CHECK(h3.predicted_order == 120);
  CHECK(type_of({{1, 3, 2}, {3, 1, 4}, {2, 4, 1}}).predicted_order == 48);
  std::vector<std::vector<int>> a1x4(4, std::vector<int>(4, 2));
  for (int i = 0; i < 4; ++i) a1x4[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  const auto t = type_of(a1x4);
  CHECK(t.name() == "A1 x A1 x A1 x A1");
  CHECK(t.predicted_order == 16);
}

TEST_CASE("infinite types are rejected") {
  CHECK_THROWS_AS(classify(CoxeterMatrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})), NotFiniteType);
  CHECK_THROWS_AS(classify(CoxeterMatrix({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}})), NotFiniteType);
  CHECK_THROWS_AS(classify(CoxeterMatrix({{1, 5, 2}, {5, 1, 5}, {2, 5, 1}})), NotFiniteType);
  try {
    classify(CoxeterMatrix({{1, 2, 2, 2}, {2, 1, 3, 3}, {2, 3, 1, 3}, {2, 3, 3, 1}}));
    FAIL("affine A2 classified");
  } catch (const NotFiniteType& e) {
    CHECK(e.component() == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("type names parse and normalize") {
  CHECK(parse_coxeter_type("I2_3").name() == "A2");
  CHECK(parse_coxeter_type("I2(4)").name() == "B2");
  CHECK(parse_coxeter_type("G2").name() == "I2(6)");
  CHECK(parse_coxeter_type("D3").name() == "A3");
  CHECK(parse_coxeter_type("A1^3") == parse_coxeter_type("A1 x A1 x A1"));
  CHECK(parse_coxeter_type("A1xA2") == parse_coxeter_type("A2 x A1"));
  CHECK_THROWS_AS(parse_coxeter_type("Z9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coxeter_type("E9"), std::invalid_argument);
}

TEST_CASE("catalog orders agree with coset enumeration") {
  for (const char* name : {"A1", "A3", "A4", "B3", "B4", "D4", "D5", "F4", "H3", "E6", "I2(7)", "A2 x A1"}) {
    CAPTURE(name);
    const auto type = parse_coxeter_type(name);
    const auto m = standard_matrix(type);
    CHECK(classify(m) == type);
    CHECK(testing::coset_enumeration_order(m) == type.predicted_order);
  }
}

TEST_CASE("standard matrices classify back under relabelling") {
  std::mt19937_64 rng(7);
  for (const auto& name : testing::round_trip_types()) {
    CAPTURE(name);
    const auto type = parse_coxeter_type(name);
    const auto m = standard_matrix(type);
    std::vector<int> order(static_cast<std::size_t>(m.rank()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(classify(m.permuted(order)) == type);
  }
}

TEST_CASE("extraction is independent of the base vertex up to relabelling") {
  for (const char* name : {"A3", "B3", "H3", "A2 x A1", "I2(5)"}) {
    CAPTURE(name);
    const Graph g = named_example(name);
    const auto r = recognize(g);
    REQUIRE(accepted(r));
    const auto& c = std::get<MirrorCertificate>(r);
    const auto m0 = extract_coxeter_matrix(g, c, 0);
    CHECK(classify(m0) == parse_coxeter_type(name));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
      const Vertex base = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.num_vertices()));
      const auto mb = extract_coxeter_matrix(g, c, base);
      std::vector<int> order(static_cast<std::size_t>(mb.rank()));
      std::iota(order.begin(), order.end(), 0);
      bool matched = false;
      do matched = mb.permuted(order) == m0;
      while (!matched && std::next_permutation(order.begin(), order.end()));
      CHECK(matched);
    }
  }
}

TEST_CASE("order check") {
  CHECK(check_order(cycle_graph(12), parse_coxeter_type("I2(6)")));
  CHECK_FALSE(check_order(cycle_graph(10), parse_coxeter_type("I2(6)")));
}

TEST_CASE("matrix JSON forms") {
  const auto m = coxeter_matrix_from_json(nlohmann::json::parse("[[1,5],[5,1]]"));
  CHECK(m(0, 1) == 5);
  CHECK(coxeter_matrix_from_json(nlohmann::json::parse(R"({"matrix": [[1,5],[5,1]]})")) == m);
  CHECK_THROWS_AS(coxeter_matrix_from_json(nlohmann::json::parse(R"({"m": 1})")), ParseError);
  CHECK_THROWS_AS(coxeter_matrix_from_json(nlohmann::json::parse(R"([[1,"a"],[5,1]])")), ParseError);
}
