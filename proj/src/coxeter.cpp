#include "mirror/coxeter.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <regex>
#include <sstream>

namespace mirror {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const auto r = entries_.size();
  if (r == 0) throw ValidationError("Coxeter matrix must have rank >= 1");
  for (std::size_t i = 0; i < r; ++i) {
    if (entries_[i].size() != r) throw ValidationError("Coxeter matrix must be square");
    if (entries_[i][i] != 1)
      throw ValidationError("Coxeter matrix diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                            ") must be 1");
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (entries_[i][j] != entries_[j][i])
        throw ValidationError("Coxeter matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (entries_[i][j] < 2)
        throw ValidationError("Coxeter matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") must be >= 2");
    }
}

CoxeterMatrix CoxeterMatrix::permuted(const std::vector<int>& order) const {
  const auto r = entries_.size();
  std::vector<std::vector<int>> out(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      out[i][j] = entries_[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])];
  return CoxeterMatrix(std::move(out));
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::uint64_t power_of_two(int n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n);
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::H: return 'H';
    case Family::I2: return 'I';
  }
  return '?';
}

}  // namespace

std::string CoxeterFactor::name() const {
  if (family == Family::I2) return "I2(" + std::to_string(parameter) + ")";
  return std::string(1, family_letter(family)) + std::to_string(parameter);
}

std::uint64_t CoxeterFactor::order() const {
  const int n = parameter;
  switch (family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return saturating_mul(power_of_two(n), factorial(n));
    case Family::D: return saturating_mul(power_of_two(n - 1), factorial(n));
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::H: return n == 3 ? 120 : 14400;
    case Family::I2: return 2ULL * static_cast<std::uint64_t>(n);
  }
  return 0;
}

CoxeterFactor normalized_factor(Family family, int parameter) {
  auto bad = [&] {
    return std::invalid_argument("no finite Coxeter type " + std::string(1, family_letter(family)) +
                                 (family == Family::I2 ? "2(" + std::to_string(parameter) + ")"
                                                       : std::to_string(parameter)));
  };
  switch (family) {
    case Family::A:
      if (parameter < 1) throw bad();
      break;
    case Family::B:
      if (parameter < 2) throw bad();
      break;
    case Family::D:
      if (parameter == 3) return {Family::A, 3};
      if (parameter < 4) throw bad();
      break;
    case Family::E:
      if (parameter < 6 || parameter > 8) throw bad();
      break;
    case Family::F:
      if (parameter != 4) throw bad();
      break;
    case Family::H:
      if (parameter < 3 || parameter > 4) throw bad();
      break;
    case Family::I2:
      if (parameter < 3) throw bad();
      if (parameter == 3) return {Family::A, 2};
      if (parameter == 4) return {Family::B, 2};
      break;
  }
  return {family, parameter};
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank();
  return r;
}

std::vector<std::string> CoxeterType::factor_names() const {
  std::vector<std::string> out;
  for (const auto& f : factors) out.push_back(f.name());
  return out;
}

std::string CoxeterType::name() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += f.name();
  }
  return out;
}

CoxeterType make_type(std::vector<CoxeterFactor> factors) {
  CoxeterType t;
  for (auto& f : factors) f = normalized_factor(f.family, f.parameter);
  std::sort(factors.begin(), factors.end());
  t.factors = std::move(factors);
  for (const auto& f : t.factors) t.predicted_order = saturating_mul(t.predicted_order, f.order());
  return t;
}

CoxeterType parse_coxeter_type(const std::string& text) {
  static const std::regex kToken(R"(^\s*(?:([ABDEFH])(\d+)|I2(?:_(\d+)|\((\d+)\))|G2)(?:\^(\d+))?\s*$)");
  std::vector<CoxeterFactor> factors;
  std::string token;
  std::string rest = text;
  std::size_t start = 0;
  auto flush = [&](const std::string& tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, kToken)) throw std::invalid_argument("cannot parse Coxeter type '" + tok + "'");
    CoxeterFactor f;
    if (m[1].matched) {
      const char c = m[1].str()[0];
      f.family = c == 'A' ? Family::A : c == 'B' ? Family::B : c == 'D' ? Family::D
               : c == 'E' ? Family::E : c == 'F' ? Family::F : Family::H;
      f.parameter = std::stoi(m[2].str());
    } else if (m[3].matched || m[4].matched) {
      f.family = Family::I2;
      f.parameter = std::stoi(m[3].matched ? m[3].str() : m[4].str());
    } else {
      f.family = Family::I2;
      f.parameter = 6;
    }
    const int reps = m[5].matched ? std::stoi(m[5].str()) : 1;
    if (reps < 1) throw std::invalid_argument("exponent must be positive in '" + tok + "'");
    for (int i = 0; i < reps; ++i) factors.push_back(f);
  };
  for (std::size_t i = 0; i <= rest.size(); ++i) {
    if (i == rest.size() || rest[i] == 'x' || rest[i] == '*') {
      flush(rest.substr(start, i - start));
      start = i + 1;
    }
  }
  return make_type(std::move(factors));
}

CoxeterMatrix standard_matrix(const CoxeterType& type) {
  const int r = type.rank();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 2));
  for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  int offset = 0;
  auto link = [&](int a, int b, int label) {
    m[static_cast<std::size_t>(offset + a)][static_cast<std::size_t>(offset + b)] = label;
    m[static_cast<std::size_t>(offset + b)][static_cast<std::size_t>(offset + a)] = label;
  };
  for (const auto& f : type.factors) {
    const int n = f.rank();
    switch (f.family) {
      case Family::A:
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
        break;
      case Family::B:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
        link(n - 2, n - 1, 4);
        break;
      case Family::D:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
        link(n - 3, n - 1, 3);
        break;
      case Family::E:
        // Bourbaki numbering shifted to 0: chain 0-2-3-4-..., node 1 on node 3.
        link(0, 2, 3);
        link(1, 3, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, 3);
        break;
      case Family::F:
        link(0, 1, 3);
        link(1, 2, 4);
        link(2, 3, 3);
        break;
      case Family::H:
        link(0, 1, 5);
        for (int i = 1; i + 1 < n; ++i) link(i, i + 1, 3);
        break;
      case Family::I2:
        link(0, 1, f.parameter);
        break;
    }
    offset += n;
  }
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix extract_coxeter_matrix(const Graph& g, const MirrorCertificate& c, Vertex base) {
  auto nb = g.neighbors(base);
  const auto r = nb.size();
  if (r == 0) throw StructureError("base vertex has no edges");
  auto slot = [&](Vertex w) {
    return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };

  std::vector<int> classes;
  for (Vertex w : nb) classes.push_back(c.embedding.edge_class(g, base, w));
  std::sort(classes.begin(), classes.end());
  if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
    throw StructureError("two edges at the base vertex share a Theta-class");

  std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  for (const auto& cyc : c.convex_cycles) {
    auto it = std::find(cyc.vertices.begin(), cyc.vertices.end(), base);
    if (it == cyc.vertices.end()) continue;
    const int t = static_cast<int>(it - cyc.vertices.begin());
    const auto a = slot(cyc.at(t - 1));
    const auto b = slot(cyc.at(t + 1));
    if (m[a][b] != 0)
      throw StructureError("edges " + std::to_string(base) + "-" + std::to_string(nb[a]) + " and " +
                           std::to_string(base) + "-" + std::to_string(nb[b]) + " lie on two convex cycles");
    m[a][b] = m[b][a] = cyc.half_length();
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (m[i][j] == 0)
        throw StructureError("edges " + std::to_string(base) + "-" + std::to_string(nb[i]) + " and " +
                             std::to_string(base) + "-" + std::to_string(nb[j]) + " lie on no convex cycle");
  return CoxeterMatrix(std::move(m));
}

namespace {

CoxeterFactor classify_component(const CoxeterMatrix& m, const std::vector<int>& comp) {
  const auto s = comp.size();
  auto fail = [&]() {
    std::string names;
    for (int v : comp) names += (names.empty() ? "" : ",") + std::to_string(v);
    return NotFiniteType("diagram component {" + names + "} is not a finite Coxeter type", comp);
  };
  if (s == 1) return {Family::A, 1};
  if (s == 2) return normalized_factor(Family::I2, m(comp[0], comp[1]));

  std::map<int, std::vector<int>> adj;
  int edge_count = 0;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      if (m(comp[a], comp[b]) >= 3) {
        adj[comp[a]].push_back(comp[b]);
        adj[comp[b]].push_back(comp[a]);
        ++edge_count;
      }
  if (edge_count != static_cast<int>(s) - 1) throw fail();  // connected, so a tree iff s-1 edges

  std::vector<int> branch;
  for (int v : comp) {
    const auto deg = adj[v].size();
    if (deg > 3) throw fail();
    if (deg == 3) branch.push_back(v);
  }
  const int n = static_cast<int>(s);

  if (branch.empty()) {
    int end = -1;
    for (int v : comp)
      if (adj[v].size() == 1) {
        end = v;
        break;
      }
    std::vector<int> path{end};
    int prev = -1;
    while (path.size() < s) {
      const auto& nbrs = adj[path.back()];
      const int next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
      prev = path.back();
      path.push_back(next);
    }
    std::vector<int> labels;
    for (std::size_t i = 0; i + 1 < s; ++i) labels.push_back(m(path[i], path[i + 1]));
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != 3) odd.push_back(i);
    if (odd.empty()) return {Family::A, n};
    if (odd.size() != 1) throw fail();
    const auto pos = odd.front();
    const bool terminal = pos == 0 || pos + 1 == labels.size();
    const int label = labels[pos];
    if (label == 4 && terminal) return {Family::B, n};
    if (label == 4 && n == 4 && pos == 1) return {Family::F, 4};
    if (label == 5 && terminal && (n == 3 || n == 4)) return {Family::H, n};
    throw fail();
  }

  if (branch.size() != 1) throw fail();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b) {
      const int label = m(comp[a], comp[b]);
      if (label >= 3 && label != 3) throw fail();
    }
  const int centre = branch.front();
  std::vector<int> arms;
  for (int w : adj[centre]) {
    int len = 1;
    int prev = centre;
    int cur = w;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  throw fail();
}

}  // namespace

CoxeterType classify(const CoxeterMatrix& m) {
  const int r = m.rank();
  std::vector<int> comp_of(static_cast<std::size_t>(r), -1);
  std::vector<CoxeterFactor> factors;
  for (int s = 0; s < r; ++s) {
    if (comp_of[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> comp{s};
    comp_of[static_cast<std::size_t>(s)] = s;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int t = 0; t < r; ++t)
        if (comp_of[static_cast<std::size_t>(t)] < 0 && m(comp[head], t) >= 3) {
          comp_of[static_cast<std::size_t>(t)] = s;
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    factors.push_back(classify_component(m, comp));
  }
  return make_type(std::move(factors));
}

bool check_order(const Graph& g, const CoxeterType& t) {
  return static_cast<std::uint64_t>(g.num_vertices()) == t.predicted_order;
}

}  // namespace mirror
