#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mirror/coxeter.hpp"
#include "mirror/graph.hpp"

namespace mirror {

class ZeroNormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotReflectionArrangement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class GroupBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};
class DegeneracyUnresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NumericalCollision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Group elements are equal when they agree entrywise within kMatrixTolerance.
// Two elements closer than kSeparationTolerance but not equal signal lost
// precision.
inline constexpr double kMatrixTolerance = 1e-7;
inline constexpr double kSeparationTolerance = 1e-4;
inline constexpr int kDefaultGroupBudget = 20000;

struct GenerateOptions {
  int budget = kDefaultGroupBudget;
  std::uint64_t seed = 1;
  int max_seed_retries = 32;
};

// Central hyperplane arrangement given by one normal vector per hyperplane.
struct Arrangement {
  int dim = 0;
  std::vector<Eigen::VectorXd> normals;

  // Throws ValidationError on bad dimensions or parallel normals, ZeroNormal on 0.
  void validate() const;
};

Eigen::MatrixXd reflection(const Eigen::VectorXd& normal);

bool is_reflection_arrangement(const Arrangement& a, double tolerance = kMatrixTolerance);

// Standard arrangement of a type; all families except E and H4.
Arrangement standard_arrangement(const CoxeterType& type);

struct TopeGraph {
  Graph graph;
  std::vector<std::string> signs;  // per vertex, one '+'/'-' per hyperplane
};

// Chambers as the orbit of a generic point under the reflection group.
TopeGraph tope_graph(const Arrangement& a, const GenerateOptions& options = {});

// Generators of the geometric representation: sigma_i(x) = x - 2 (Bx)_i e_i
// with B_ij = -cos(pi / m_ij).
std::vector<Eigen::MatrixXd> geometric_generators(const CoxeterMatrix& m);

// Smallest p <= limit with M^p = I (within tolerance), or 0.
int multiplicative_order(const Eigen::MatrixXd& m, int limit, double tolerance = kMatrixTolerance);

// Matrix group generated by `generators`, elements numbered in breadth-first
// order from the identity, with an edge {g, s_i g} per generator.
struct GroupClosure {
  std::vector<Eigen::MatrixXd> elements;
  std::vector<Edge> edges;
};
GroupClosure group_closure(const std::vector<Eigen::MatrixXd>& generators, int budget);

// Cayley graph of the finite Coxeter group with matrix m; identity is vertex 0.
Graph generate_cayley(const CoxeterMatrix& m, const GenerateOptions& options = {});

// Corpus graphs by name: Q<d>, C<n>, path<n>, K<n>, K<a>_<b>, K23, prism<n>,
// star<n>, permutahedron, or any Coxeter type name ("A3", "I2_6", "A1^3").
Graph named_example(const std::string& name, const GenerateOptions& options = {});

}  // namespace mirror
