#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirror/graph.hpp"
#include "mirror/recognition.hpp"

namespace mirror {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFiniteType : public std::runtime_error {
 public:
  NotFiniteType(const std::string& message, std::vector<int> component)
      : std::runtime_error(message), component_(std::move(component)) {}
  // Generators of the offending diagram component.
  const std::vector<int>& component() const { return component_; }

 private:
  std::vector<int> component_;
};

// Symmetric integer matrix with unit diagonal and off-diagonal entries >= 2.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  // Throws ValidationError when the entries do not form a Coxeter matrix.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  // Simultaneous row/column permutation: result(i,j) = (*this)(order[i], order[j]).
  CoxeterMatrix permuted(const std::vector<int>& order) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::vector<int>> entries_;
};

enum class Family { A, B, D, E, F, H, I2 };

// One irreducible finite type. For I2, `parameter` is m; otherwise the rank.
//
// Rank-2 dihedral types are normalized: m = 3 is A2 and m = 4 is B2, so a
// given group has exactly one spelling.
struct CoxeterFactor {
  Family family = Family::A;
  int parameter = 1;

  int rank() const { return family == Family::I2 ? 2 : parameter; }
  std::string name() const;  // "A3", "I2(5)"
  std::uint64_t order() const;

  friend bool operator==(const CoxeterFactor&, const CoxeterFactor&) = default;
  friend auto operator<=>(const CoxeterFactor&, const CoxeterFactor&) = default;
};

CoxeterFactor normalized_factor(Family family, int parameter);

struct CoxeterType {
  std::vector<CoxeterFactor> factors;  // sorted
  std::uint64_t predicted_order = 1;   // saturates at UINT64_MAX

  int rank() const;
  std::string name() const;  // factors joined by " x "
  std::vector<std::string> factor_names() const;

  friend bool operator==(const CoxeterType& a, const CoxeterType& b) { return a.factors == b.factors; }
};

// Parses "A3", "I2(6)", "I2_6", "A1^3", "A2 x A1", "A1xA1xA1". Throws
// std::invalid_argument. The result is normalized and validated.
CoxeterType parse_coxeter_type(const std::string& text);

CoxeterType make_type(std::vector<CoxeterFactor> factors);

// Coxeter matrix of a catalog type, factors laid out block-diagonally.
CoxeterMatrix standard_matrix(const CoxeterType& type);

// Each pair of edges at the base vertex lies on exactly one convex
// cycle, whose half length is the Coxeter exponent. Generators are the
// base vertex's edges in ascending neighbour order.
CoxeterMatrix extract_coxeter_matrix(const Graph& g, const MirrorCertificate& c, Vertex base = 0);

// Throws NotFiniteType if some diagram component is not in the catalog.
CoxeterType classify(const CoxeterMatrix& m);

bool check_order(const Graph& g, const CoxeterType& t);

}  // namespace mirror
