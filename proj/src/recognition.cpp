#include "mirror/recognition.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace mirror {

namespace {

constexpr std::array<std::pair<RejectStage, const char*>, 7> kStageNames{{
    {RejectStage::not_bipartite, "not-bipartite"},
    {RejectStage::not_partial_cube, "not-partial-cube"},
    {RejectStage::not_harmonic_even, "not-harmonic-even"},
    {RejectStage::class_pairing_conflict, "class-pairing-conflict"},
    {RejectStage::class_pairing_incomplete, "class-pairing-incomplete"},
    {RejectStage::candidate_not_automorphism, "candidate-not-automorphism"},
    {RejectStage::candidate_not_involutive_swap, "candidate-not-involutive-swap"},
}};

RejectReason make_reject(RejectStage stage, std::string message) {
  RejectReason r;
  r.stage = stage;
  r.message = std::move(message);
  return r;
}

}  // namespace

const char* to_string(RejectStage s) {
  for (const auto& [stage, name] : kStageNames)
    if (stage == s) return name;
  return "unknown";
}

std::optional<RejectStage> reject_stage_from_string(const std::string& s) {
  for (const auto& [stage, name] : kStageNames)
    if (s == name) return stage;
  return std::nullopt;
}

ClassPairing candidate_class_permutation(const ThetaEmbedding& e, const std::vector<ConvexCycle>& cycles,
                                         int class_index) {
  const auto k = static_cast<std::size_t>(e.k);
  std::vector<int> perm(k, -1);
  std::vector<int> source(k, -1);  // cycle that fixed each entry
  perm[static_cast<std::size_t>(class_index)] = class_index;

  auto assign = [&](int from, int to, int cycle_idx) -> std::optional<RejectReason> {
    auto& slot = perm[static_cast<std::size_t>(from)];
    if (slot == to) return std::nullopt;
    if (slot >= 0) {
      auto r = make_reject(RejectStage::class_pairing_conflict,
                           "class " + std::to_string(from) + " is sent to both class " + std::to_string(slot) +
                               " and class " + std::to_string(to) + " by the reflection across class " +
                               std::to_string(class_index));
      r.class_index = class_index;
      r.other_class = from;
      if (source[static_cast<std::size_t>(from)] >= 0)
        r.cycles.push_back(cycles[static_cast<std::size_t>(source[static_cast<std::size_t>(from)])].vertices);
      r.cycles.push_back(cycles[static_cast<std::size_t>(cycle_idx)].vertices);
      return r;
    }
    slot = to;
    source[static_cast<std::size_t>(from)] = cycle_idx;
    return std::nullopt;
  };

  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto& c = cycles[ci];
    auto it = std::find(c.classes.begin(), c.classes.end(), class_index);
    if (it == c.classes.end()) continue;
    const int p = static_cast<int>(it - c.classes.begin());
    // Reflecting C across its two class-i edges sends edge p+t onto edge p-t.
    for (int t = 1; t < c.half_length(); ++t) {
      const int a = c.edge_class(p + t);
      const int b = c.edge_class(p - t);
      if (auto r = assign(a, b, static_cast<int>(ci))) return {std::nullopt, std::move(r)};
      if (auto r = assign(b, a, static_cast<int>(ci))) return {std::nullopt, std::move(r)};
    }
  }

  for (std::size_t j = 0; j < k; ++j) {
    if (perm[j] < 0) {
      auto r = make_reject(RejectStage::class_pairing_incomplete,
                           "class " + std::to_string(j) + " shares no convex cycle with class " +
                               std::to_string(class_index));
      r.class_index = class_index;
      r.other_class = static_cast<int>(j);
      return {std::nullopt, std::move(r)};
    }
  }
  return {std::move(perm), std::nullopt};
}

namespace {

BitVec permute_bits(const BitVec& x, const std::vector<int>& perm) {
  BitVec out(x.size());
  for (int j = 0; j < x.size(); ++j)
    if (x.test(j)) out.set(perm[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace

CandidateResult build_candidate(const Graph& g, const ThetaEmbedding& e, const CoordinateIndex& index,
                                int class_index, const std::vector<int>& class_perm) {
  const Edge anchor = e.anchor_edge(class_index);
  const auto& coords = e.coords;
  BitVec flip = coords[static_cast<std::size_t>(anchor.v)] ^
                permute_bits(coords[static_cast<std::size_t>(anchor.u)], class_perm);

  const int n = g.num_vertices();
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    auto it = index.find(permute_bits(coords[static_cast<std::size_t>(x)], class_perm) ^ flip);
    if (it == index.end()) {
      auto r = make_reject(RejectStage::candidate_not_automorphism,
                           "reflection across class " + std::to_string(class_index) + " sends vertex " +
                               std::to_string(x) + " outside the graph");
      r.class_index = class_index;
      r.vertices = std::make_pair(x, -1);
      return {std::nullopt, std::move(r)};
    }
    image[static_cast<std::size_t>(x)] = it->second;
  }

  for (const auto& edge : g.edges()) {
    if (!g.adjacent(image[static_cast<std::size_t>(edge.u)], image[static_cast<std::size_t>(edge.v)])) {
      auto r = make_reject(RejectStage::candidate_not_automorphism,
                           "edge " + to_string(edge) + " is not mapped to an edge");
      r.class_index = class_index;
      r.edge = edge;
      return {std::nullopt, std::move(r)};
    }
  }

  for (int idx : e.class_edges[static_cast<std::size_t>(class_index)]) {
    const auto& edge = e.edges[static_cast<std::size_t>(idx)];
    if (image[static_cast<std::size_t>(edge.u)] != edge.v || image[static_cast<std::size_t>(edge.v)] != edge.u) {
      auto r = make_reject(RejectStage::candidate_not_involutive_swap,
                           "edge " + to_string(edge) + " of class " + std::to_string(class_index) +
                               " is not swapped");
      r.class_index = class_index;
      r.edge = edge;
      return {std::nullopt, std::move(r)};
    }
  }

  for (Vertex x = 0; x < n; ++x) {
    if (image[static_cast<std::size_t>(image[static_cast<std::size_t>(x)])] != x) {
      auto r = make_reject(RejectStage::candidate_not_involutive_swap,
                           "candidate for class " + std::to_string(class_index) + " is not an involution at vertex " +
                               std::to_string(x));
      r.class_index = class_index;
      r.vertices = std::make_pair(x, image[static_cast<std::size_t>(x)]);
      return {std::nullopt, std::move(r)};
    }
  }

  MirrorAutomorphism a;
  a.class_index = class_index;
  a.class_perm = class_perm;
  a.flip_mask = std::move(flip);
  a.vertex_perm = std::move(image);
  return {std::move(a), std::nullopt};
}

CandidateResult build_candidate(const Graph& g, const ThetaEmbedding& e, int class_index,
                                const std::vector<int>& class_perm) {
  return build_candidate(g, e, coordinate_index(e), class_index, class_perm);
}

Recognition recognize(const Graph& g) {
  if (auto [colour, bad] = two_colouring(g); bad) {
    auto r = make_reject(RejectStage::not_bipartite, "odd cycle through edge " + to_string(*bad));
    r.edge = *bad;
    return r;
  }

  ThetaEmbedding emb;
  try {
    emb = embed(g);
  } catch (const NotPartialCube& ex) {
    auto r = make_reject(RejectStage::not_partial_cube, std::string(to_string(ex.reason())) + ": " + ex.what());
    if (ex.reason() == NotPartialCube::Reason::cut_violation) {
      r.class_index = ex.class_index();
    } else {
      r.vertices = ex.witness();
    }
    return r;
  }

  auto index = coordinate_index(emb);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!index.contains(emb.coords[static_cast<std::size_t>(v)].complement())) {
      auto r = make_reject(RejectStage::not_harmonic_even,
                           "vertex " + std::to_string(v) + " has no vertex at distance " + std::to_string(emb.k));
      r.vertices = std::make_pair(v, -1);
      return r;
    }
  }
  if (!is_harmonic_even(g, emb))
    return make_reject(RejectStage::not_harmonic_even, "antipodes of adjacent vertices are not adjacent");

  MirrorCertificate cert;
  cert.convex_cycles = enumerate_convex_cycles(g, emb);
  for (int i = 0; i < emb.k; ++i) {
    auto pairing = candidate_class_permutation(emb, cert.convex_cycles, i);
    if (pairing.reject) return *std::move(pairing.reject);
    auto candidate = build_candidate(g, emb, index, i, *pairing.permutation);
    if (candidate.reject) return *std::move(candidate.reject);
    cert.automorphisms.push_back(*std::move(candidate.automorphism));
  }
  cert.embedding = std::move(emb);
  return cert;
}

namespace {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    return std::hash<long long>{}((static_cast<long long>(e.u) << 32) ^ e.v);
  }
};

VerifyResult fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

VerifyResult verify_certificate(const Graph& g, const MirrorCertificate& c) {
  const int n = g.num_vertices();
  const auto& emb = c.embedding;
  const int k = emb.k;
  const auto& edges = g.edges();
  const auto m = edges.size();

  // Independent metric.
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<std::vector<int>> dist;
  dist.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) dist.push_back(bfs_distances(n, adj, s));
  auto d = [&](Vertex a, Vertex b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  std::unordered_set<Edge, EdgeHash> edge_set(edges.begin(), edges.end());

  if (k < 0) return fail("negative class count");
  if (emb.class_of.size() != m) return fail("class_of does not cover every edge");
  if (emb.coords.size() != static_cast<std::size_t>(n)) return fail("coords do not cover every vertex");
  std::vector<int> class_size(static_cast<std::size_t>(k), 0);
  for (int cls : emb.class_of) {
    if (cls < 0 || cls >= k) return fail("class index out of range");
    ++class_size[static_cast<std::size_t>(cls)];
  }
  for (int i = 0; i < k; ++i)
    if (class_size[static_cast<std::size_t>(i)] == 0) return fail("class " + std::to_string(i) + " is empty");

  // The partition must coincide with the Theta relation.
  for (std::size_t a = 0; a < m; ++a) {
    const auto& ab = edges[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& xy = edges[b];
      const bool related = d(ab.u, xy.u) + d(ab.v, xy.v) != d(ab.u, xy.v) + d(ab.v, xy.u);
      if (related != (emb.class_of[a] == emb.class_of[b]))
        return fail("theta-partition: edges " + to_string(ab) + " and " + to_string(xy));
    }
  }

  for (const auto& x : emb.coords)
    if (x.size() != k) return fail("coordinate length differs from k");
  for (std::size_t idx = 0; idx < m; ++idx) {
    const auto& e = edges[idx];
    auto diff = emb.coords[static_cast<std::size_t>(e.u)] ^ emb.coords[static_cast<std::size_t>(e.v)];
    if (diff.count() != 1 || !diff.test(emb.class_of[idx]))
      return fail("edge coordinates: " + to_string(e));
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (hamming(emb.coords[static_cast<std::size_t>(u)], emb.coords[static_cast<std::size_t>(v)]) != d(u, v))
        return fail("isometry: vertices " + std::to_string(u) + "," + std::to_string(v));

  if (c.automorphisms.size() != static_cast<std::size_t>(k)) return fail("need one automorphism per class");
  for (int i = 0; i < k; ++i) {
    const auto& a = c.automorphisms[static_cast<std::size_t>(i)];
    const std::string tag = "automorphism " + std::to_string(i) + ": ";
    if (a.class_index != i) return fail(tag + "class index mismatch");
    const auto& p = a.vertex_perm;
    if (p.size() != static_cast<std::size_t>(n)) return fail(tag + "vertex_perm has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Vertex x : p) {
      if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) return fail(tag + "vertex_perm is not a permutation");
      hit[static_cast<std::size_t>(x)] = 1;
    }
    for (const auto& e : edges)
      if (!edge_set.contains(Edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])))
        return fail(tag + "edge " + to_string(e) + " not preserved");
    for (Vertex x = 0; x < n; ++x)
      if (p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])] != x) return fail(tag + "not an involution");
    for (std::size_t idx = 0; idx < m; ++idx) {
      if (emb.class_of[idx] != i) continue;
      const auto& e = edges[idx];
      if (p[static_cast<std::size_t>(e.u)] != e.v || p[static_cast<std::size_t>(e.v)] != e.u)
        return fail(tag + "edge " + to_string(e) + " not swapped");
    }
    for (Vertex x = 0; x < n; ++x)
      if (emb.coords[static_cast<std::size_t>(x)].test(i) ==
          emb.coords[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])].test(i))
        return fail(tag + "sides of the cut are not exchanged");

    const auto& pi = a.class_perm;
    if (pi.size() != static_cast<std::size_t>(k) || a.flip_mask.size() != k) return fail(tag + "hypercube form has wrong size");
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (int j : pi) {
      if (j < 0 || j >= k || used[static_cast<std::size_t>(j)]) return fail(tag + "class_perm is not a permutation");
      used[static_cast<std::size_t>(j)] = 1;
    }
    if (pi[static_cast<std::size_t>(i)] != i) return fail(tag + "class_perm moves its own class");
    for (Vertex x = 0; x < n; ++x) {
      const auto& from = emb.coords[static_cast<std::size_t>(x)];
      const auto& to = emb.coords[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
      for (int j = 0; j < k; ++j) {
        const int pj = pi[static_cast<std::size_t>(j)];
        if (to.test(pj) != (from.test(j) != a.flip_mask.test(pj)))
          return fail(tag + "coordinate form fails at vertex " + std::to_string(x));
      }
    }
  }

  for (const auto& cyc : c.convex_cycles) {
    const auto& vs = cyc.vertices;
    const auto len = vs.size();
    if (len < 4 || len % 2 != 0 || cyc.classes.size() != len / 2) return fail("convex cycle has malformed length");
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    for (Vertex v : vs) {
      if (v < 0 || v >= n || on[static_cast<std::size_t>(v)]) return fail("convex cycle repeats a vertex");
      on[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t t = 0; t < len; ++t) {
      Edge e(vs[t], vs[(t + 1) % len]);
      auto it = std::lower_bound(edges.begin(), edges.end(), e);
      if (it == edges.end() || *it != e) return fail("convex cycle uses a non-edge " + to_string(e));
      if (emb.class_of[static_cast<std::size_t>(it - edges.begin())] != cyc.classes[t % (len / 2)])
        return fail("convex cycle class labels disagree with the partition");
    }
    for (std::size_t a = 0; a < len; ++a)
      for (std::size_t b = a + 1; b < len; ++b)
        for (Vertex w = 0; w < n; ++w)
          if (!on[static_cast<std::size_t>(w)] && d(vs[a], w) + d(w, vs[b]) == d(vs[a], vs[b]))
            return fail("cycle through vertex " + std::to_string(vs[0]) + " is not convex");
  }
  return {};
}

}  // namespace mirror
