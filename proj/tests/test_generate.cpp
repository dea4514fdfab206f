#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mirror/coxeter.hpp"
#include "mirror/generate.hpp"
#include "mirror/oracle.hpp"
#include "mirror/partial_cube.hpp"

using namespace mirror;

namespace {

Arrangement planar(std::initializer_list<double> angles_deg) {
  Arrangement a;
  a.dim = 2;
  for (double deg : angles_deg) {
    const double t = deg * std::numbers::pi / 180.0;
    a.normals.push_back(Eigen::Vector2d(std::cos(t), std::sin(t)));
  }
  return a;
}

}  // namespace

TEST_CASE("reflection matrices") {
  const auto r = reflection(Eigen::Vector2d(1, 0));
  CHECK(r(0, 0) == doctest::Approx(-1.0));
  CHECK(r(1, 1) == doctest::Approx(1.0));
  CHECK(r(0, 1) == doctest::Approx(0.0));
  const auto s = reflection(Eigen::Vector3d(1, 1, 0));
  CHECK((s * s - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(s(0, 1) == doctest::Approx(-1.0));
  CHECK(s.determinant() == doctest::Approx(-1.0));
  CHECK((s * s.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(reflection(Eigen::Vector2d(0, 0)), ZeroNormal);
}

TEST_CASE("reflection arrangements") {
  CHECK(is_reflection_arrangement(planar({0, 60, 120})));
  CHECK_FALSE(is_reflection_arrangement(planar({0, 45})));
  CHECK(is_reflection_arrangement(planar({0, 45, 90, 135})));
  CHECK(is_reflection_arrangement(standard_arrangement(parse_coxeter_type("A3"))));
  CHECK(is_reflection_arrangement(standard_arrangement(parse_coxeter_type("H3"))));
  CHECK_THROWS_AS(planar({0, 180}).validate(), ValidationError);
  Arrangement zero = planar({0});
  zero.normals.push_back(Eigen::Vector2d(0, 0));
  CHECK_THROWS_AS(zero.validate(), ZeroNormal);
}

TEST_CASE("tope graphs of planar arrangements are even cycles") {
  const auto a2 = tope_graph(planar({0, 60, 120}));
  CHECK(a2.graph.num_vertices() == 6);
  CHECK(oracle::are_isomorphic(a2.graph, cycle_graph(6)).has_value());
  const auto b2 = tope_graph(planar({0, 45, 90, 135}));
  CHECK(oracle::are_isomorphic(b2.graph, cycle_graph(8)).has_value());
  for (std::size_t v = 0; v < a2.signs.size(); ++v) CHECK(a2.signs[v].size() == 3);
  for (const auto& e : a2.graph.edges()) {
    int diff = 0;
    for (std::size_t i = 0; i < 3; ++i) diff += a2.signs[static_cast<std::size_t>(e.u)][i] != a2.signs[static_cast<std::size_t>(e.v)][i];
    CHECK(diff == 1);
  }
  CHECK_THROWS_AS(tope_graph(planar({0, 45})), NotReflectionArrangement);
}

TEST_CASE("tope graphs do not depend on the seed") {
  const auto arr = standard_arrangement(parse_coxeter_type("B3"));
  GenerateOptions other;
  other.seed = 99;
  CHECK(oracle::are_isomorphic(tope_graph(arr).graph, tope_graph(arr, other).graph).has_value());
}

TEST_CASE("geometric generators have the prescribed orders") {
  for (const char* name : {"A3", "B3", "H3", "F4", "I2(7)"}) {
    CAPTURE(name);
    const auto m = standard_matrix(parse_coxeter_type(name));
    const auto gens = geometric_generators(m);
    for (int i = 0; i < m.rank(); ++i) {
      CHECK(multiplicative_order(gens[static_cast<std::size_t>(i)], 100) == 2);
      for (int j = i + 1; j < m.rank(); ++j)
        CHECK(multiplicative_order(gens[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(j)], 100) == m(i, j));
    }
  }
}

TEST_CASE("Cayley graphs") {
  const Graph c = generate_cayley(standard_matrix(parse_coxeter_type("I2(6)")));
  CHECK(oracle::are_isomorphic(c, cycle_graph(12)).has_value());
  CHECK(generate_cayley(standard_matrix(parse_coxeter_type("I2(3)"))).num_vertices() == 6);
  for (const char* name : {"A3", "B3", "H3", "D4", "A1^3"}) {
    CAPTURE(name);
    const auto type = parse_coxeter_type(name);
    const Graph g = generate_cayley(standard_matrix(type));
    CHECK(static_cast<std::uint64_t>(g.num_vertices()) == type.predicted_order);
    CHECK(is_bipartite(g));
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) == type.rank());
  }
}

TEST_CASE("group budgets") {
  GenerateOptions small;
  small.budget = 100;
  CHECK_THROWS_AS(generate_cayley(standard_matrix(parse_coxeter_type("A4")), small), GroupBudgetExceeded);
  CHECK_THROWS_AS(generate_cayley(standard_matrix(parse_coxeter_type("E6"))), GroupBudgetExceeded);
  CHECK_THROWS_AS(group_closure(geometric_generators(standard_matrix(parse_coxeter_type("B3"))), 10), GroupBudgetExceeded);
  CHECK_THROWS_AS(generate_cayley(CoxeterMatrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})), NotFiniteType);
}

TEST_CASE("named examples") {
  CHECK(named_example("Q3").num_vertices() == 8);
  CHECK(named_example("C10").num_vertices() == 10);
  CHECK(named_example("path4").num_edges() == 3);
  CHECK(named_example("K23").num_edges() == 6);
  CHECK(named_example("prism6").num_vertices() == 12);
  CHECK(named_example("permutahedron").num_vertices() == 24);
  CHECK_THROWS_AS(named_example("nope"), UnknownName);
}
