#include "mirror/generate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <regex>
#include <map>
#include <unordered_map>

namespace mirror {

void Arrangement::validate() const {
  if (dim < 1) throw ValidationError("arrangement dimension must be >= 1");
  if (normals.empty()) throw ValidationError("arrangement needs at least one hyperplane");
  std::vector<Eigen::VectorXd> unit;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != dim)
      throw ValidationError("normal " + std::to_string(i) + " has dimension " + std::to_string(normals[i].size()) +
                            ", expected " + std::to_string(dim));
    const double len = normals[i].norm();
    if (len < 1e-12) throw ZeroNormal("normal " + std::to_string(i) + " is zero");
    unit.push_back(normals[i] / len);
  }
  for (std::size_t i = 0; i < unit.size(); ++i)
    for (std::size_t j = i + 1; j < unit.size(); ++j)
      if (std::abs(std::abs(unit[i].dot(unit[j])) - 1.0) < kMatrixTolerance)
        throw ValidationError("normals " + std::to_string(i) + " and " + std::to_string(j) +
                              " define the same hyperplane");
}

Eigen::MatrixXd reflection(const Eigen::VectorXd& normal) {
  const double nn = normal.squaredNorm();
  if (nn < 1e-24) throw ZeroNormal("reflection needs a nonzero normal");
  const auto d = normal.size();
  return Eigen::MatrixXd::Identity(d, d) - 2.0 * normal * normal.transpose() / nn;
}

bool is_reflection_arrangement(const Arrangement& a, double tolerance) {
  a.validate();
  std::vector<Eigen::VectorXd> unit;
  for (const auto& v : a.normals) unit.push_back(v.normalized());
  for (const auto& vi : unit) {
    const auto r = reflection(vi);
    for (const auto& vj : unit) {
      const Eigen::VectorXd image = r * vj;
      bool found = false;
      for (const auto& vk : unit)
        if (std::abs(std::abs(image.dot(vk)) - 1.0) < tolerance) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

Eigen::VectorXd basis(int dim, int i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(i) = 1.0;
  return v;
}

std::vector<Eigen::VectorXd> factor_normals(const CoxeterFactor& f) {
  std::vector<Eigen::VectorXd> out;
  const int n = f.parameter;
  auto pm_pairs = [&](int dim, bool with_sum) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        out.push_back(basis(dim, i) - basis(dim, j));
        if (with_sum) out.push_back(basis(dim, i) + basis(dim, j));
      }
  };
  switch (f.family) {
    case Family::A:
      pm_pairs(n + 1, false);
      break;
    case Family::B:
      pm_pairs(n, true);
      for (int i = 0; i < n; ++i) out.push_back(basis(n, i));
      break;
    case Family::D:
      pm_pairs(n, true);
      break;
    case Family::F:
      pm_pairs(4, true);
      for (int i = 0; i < 4; ++i) out.push_back(basis(4, i));
      for (int signs = 0; signs < 8; ++signs) {
        Eigen::VectorXd v(4);
        v << 0.5, (signs & 1) ? -0.5 : 0.5, (signs & 2) ? -0.5 : 0.5, (signs & 4) ? -0.5 : 0.5;
        out.push_back(v);
      }
      break;
    case Family::H:
      if (n == 3) {
        const double phi = std::numbers::phi;
        for (int i = 0; i < 3; ++i) out.push_back(basis(3, i));
        // Cyclic permutations of (1, phi, 1/phi)/2 with sign patterns, one per line.
        for (int shift = 0; shift < 3; ++shift)
          for (int signs = 0; signs < 4; ++signs) {
            double c[3] = {1.0, (signs & 1) ? -phi : phi, (signs & 2) ? -1.0 / phi : 1.0 / phi};
            Eigen::VectorXd v(3);
            for (int t = 0; t < 3; ++t) v((t + shift) % 3) = c[t] / 2.0;
            out.push_back(v);
          }
        break;
      }
      throw std::invalid_argument("no standard arrangement shipped for " + f.name());
    case Family::I2:
      for (int j = 0; j < n; ++j) {
        const double angle = std::numbers::pi * j / n;
        Eigen::VectorXd v(2);
        v << std::cos(angle), std::sin(angle);
        out.push_back(v);
      }
      break;
    case Family::E:
      throw std::invalid_argument("no standard arrangement shipped for " + f.name());
  }
  return out;
}

// Fixed irrational weights for the scalar lookup key of a matrix.
double projection(const Eigen::MatrixXd& m) {
  double out = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) out += std::sqrt(static_cast<double>(i + 2)) * m.data()[i];
  return out;
}

double projection_slack(Eigen::Index size) {
  double out = 0;
  for (Eigen::Index i = 0; i < size; ++i) out += std::sqrt(static_cast<double>(i + 2));
  return out * kMatrixTolerance;
}

}  // namespace

Arrangement standard_arrangement(const CoxeterType& type) {
  std::vector<std::vector<Eigen::VectorXd>> blocks;
  int dim = 0;
  for (const auto& f : type.factors) {
    blocks.push_back(factor_normals(f));
    dim += static_cast<int>(blocks.back().front().size());
  }
  Arrangement a;
  a.dim = dim;
  int offset = 0;
  for (const auto& block : blocks) {
    const int d = static_cast<int>(block.front().size());
    for (const auto& v : block) {
      Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
      full.segment(offset, d) = v;
      a.normals.push_back(std::move(full));
    }
    offset += d;
  }
  return a;
}

GroupClosure group_closure(const std::vector<Eigen::MatrixXd>& generators, int budget) {
  if (generators.empty()) throw std::invalid_argument("group closure needs generators");
  const auto dim = generators.front().rows();
  GroupClosure out;
  // Elements ordered by a scalar projection; lookups compare every element in
  // a tolerance window, so no rounding-grid boundary can split one element.
  std::multimap<double, int> index;
  const double slack = projection_slack(dim * dim);
  out.elements.push_back(Eigen::MatrixXd::Identity(dim, dim));
  index.emplace(projection(out.elements.front()), 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& s : generators) {
      Eigen::MatrixXd h = s * out.elements[head];
      const double key = projection(h);
      int target = -1;
      for (auto it = index.lower_bound(key - slack); it != index.end() && it->first <= key + slack; ++it) {
        const double diff = (out.elements[static_cast<std::size_t>(it->second)] - h).cwiseAbs().maxCoeff();
        if (diff <= kMatrixTolerance) {
          target = it->second;
          break;
        }
        if (diff < kSeparationTolerance)
          throw NumericalCollision("group elements " + std::to_string(it->second) +
                                   " and a new product differ by only " + std::to_string(diff));
      }
      if (target < 0) {
        target = static_cast<int>(out.elements.size());
        if (target >= budget)
          throw GroupBudgetExceeded("group closure exceeds the budget of " + std::to_string(budget) + " elements");
        index.emplace(key, target);
        out.elements.push_back(std::move(h));
      }
      if (static_cast<int>(head) < target) out.edges.emplace_back(static_cast<int>(head), target);
    }
  }
  return out;
}

std::vector<Eigen::MatrixXd> geometric_generators(const CoxeterMatrix& m) {
  const int r = m.rank();
  Eigen::MatrixXd form(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) form(i, j) = i == j ? 1.0 : -std::cos(std::numbers::pi / m(i, j));
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 0; i < r; ++i) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(r, r);
    s.row(i) -= 2.0 * form.row(i);
    gens.push_back(std::move(s));
  }
  return gens;
}

int multiplicative_order(const Eigen::MatrixXd& m, int limit, double tolerance) {
  const auto id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::MatrixXd power = m;
  for (int p = 1; p <= limit; ++p) {
    if ((power - id).cwiseAbs().maxCoeff() < tolerance) return p;
    power = power * m;
  }
  return 0;
}

Graph generate_cayley(const CoxeterMatrix& m, const GenerateOptions& options) {
  const auto type = classify(m);
  if (type.predicted_order > static_cast<std::uint64_t>(options.budget))
    throw GroupBudgetExceeded(type.name() + " has order " + std::to_string(type.predicted_order) +
                              ", above the budget of " + std::to_string(options.budget));
  auto closure = group_closure(geometric_generators(m), options.budget + 1);
  if (closure.elements.size() != type.predicted_order)
    throw NumericalCollision("closure of " + type.name() + " produced " + std::to_string(closure.elements.size()) +
                             " elements, expected " + std::to_string(type.predicted_order));
  return Graph(static_cast<int>(closure.elements.size()), std::move(closure.edges));
}

TopeGraph tope_graph(const Arrangement& a, const GenerateOptions& options) {
  if (!is_reflection_arrangement(a)) throw NotReflectionArrangement("arrangement is not closed under its reflections");
  std::vector<Eigen::VectorXd> unit;
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& v : a.normals) {
    unit.push_back(v.normalized());
    gens.push_back(reflection(v));
  }
  const auto closure = group_closure(gens, options.budget);

  for (int attempt = 0; attempt < options.max_seed_retries; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    std::normal_distribution<double> normal;
    Eigen::VectorXd p(a.dim);
    for (int i = 0; i < a.dim; ++i) p(i) = normal(rng);

    std::vector<std::string> signs;
    std::unordered_map<std::string, int> index;
    bool degenerate = false;
    for (const auto& g : closure.elements) {
      const Eigen::VectorXd q = g * p;
      std::string s(unit.size(), '+');
      for (std::size_t i = 0; i < unit.size(); ++i) {
        const double side = unit[i].dot(q);
        if (std::abs(side) < kMatrixTolerance * std::max(1.0, q.norm())) {
          degenerate = true;
          break;
        }
        if (side < 0) s[i] = '-';
      }
      if (degenerate) break;
      if (index.emplace(s, static_cast<int>(signs.size())).second) signs.push_back(std::move(s));
    }
    if (degenerate) continue;

    std::vector<Edge> edges;
    for (std::size_t v = 0; v < signs.size(); ++v) {
      std::string flipped = signs[v];
      for (auto& c : flipped) {
        c = c == '+' ? '-' : '+';
        auto it = index.find(flipped);
        if (it != index.end() && static_cast<std::size_t>(it->second) > v)
          edges.emplace_back(static_cast<int>(v), it->second);
        c = c == '+' ? '-' : '+';
      }
    }
    return {Graph(static_cast<int>(signs.size()), std::move(edges)), std::move(signs)};
  }
  throw DegeneracyUnresolved("no generic point found after " + std::to_string(options.max_seed_retries) + " seeds");
}

Graph named_example(const std::string& name, const GenerateOptions& options) {
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  static const std::regex kCube(R"(Q(\d+))"), kCycle(R"(C(\d+))"), kPath(R"((?:path|P)(\d+))"),
      kComplete(R"(K(\d+))"), kBipartite(R"(K(\d+)_(\d+))"), kPrism(R"(prism(\d+))"), kStar(R"(star(\d+))");
  try {
    if (std::regex_match(name, m, kCube)) return hypercube_graph(num(1));
    if (std::regex_match(name, m, kCycle)) return cycle_graph(num(1));
    if (std::regex_match(name, m, kPath)) return path_graph(num(1));
    if (name == "K23") return complete_bipartite_graph(2, 3);
    if (std::regex_match(name, m, kBipartite)) return complete_bipartite_graph(num(1), num(2));
    if (std::regex_match(name, m, kComplete)) return complete_graph(num(1));
    if (std::regex_match(name, m, kPrism)) return cartesian_product(cycle_graph(num(1)), path_graph(2));
    if (std::regex_match(name, m, kStar)) return complete_bipartite_graph(1, num(1));
  } catch (const ValidationError& e) {
    throw UnknownName("example '" + name + "': " + e.what());
  }
  if (name == "permutahedron") return generate_cayley(standard_matrix(parse_coxeter_type("A3")), options);
  CoxeterType type;
  try {
    type = parse_coxeter_type(name);
  } catch (const std::invalid_argument&) {
    throw UnknownName("unknown example '" + name + "'");
  }
  return generate_cayley(standard_matrix(type), options);
}

}  // namespace mirror
