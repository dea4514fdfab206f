#include "mirror/certificate.hpp"

#include <algorithm>
#include <map>

namespace mirror {

using nlohmann::json;

CoxeterReport analyze_coxeter(const Graph& g, const MirrorCertificate& c) {
  CoxeterReport report;
  try {
    report.matrix = extract_coxeter_matrix(g, c);
    report.type = classify(*report.matrix);
    report.order_check = check_order(g, *report.type);
  } catch (const StructureError& e) {
    report.error = std::string("StructureError: ") + e.what();
  } catch (const NotFiniteType& e) {
    report.error = std::string("NotFiniteType: ") + e.what();
  }
  return report;
}

json embedding_to_json(const Graph& g, const ThetaEmbedding& e) {
  json class_of = json::object();
  for (std::size_t idx = 0; idx < g.edges().size(); ++idx) class_of[to_string(g.edges()[idx])] = e.class_of[idx];
  json coords = json::array();
  for (const auto& x : e.coords) coords.push_back(x.to_string());
  return {{"k", e.k}, {"class_of", std::move(class_of)}, {"coords", std::move(coords)}};
}

json reject_to_json(const RejectReason& r) {
  json reason = {{"stage", to_string(r.stage)}, {"message", r.message}};
  if (r.class_index >= 0) reason["class"] = r.class_index;
  if (r.other_class >= 0) reason["other_class"] = r.other_class;
  if (r.edge) reason["edge"] = {r.edge->u, r.edge->v};
  if (r.vertices) {
    json vs = json::array({r.vertices->first});
    if (r.vertices->second >= 0) vs.push_back(r.vertices->second);
    reason["vertices"] = std::move(vs);
  }
  if (!r.cycles.empty()) reason["cycles"] = r.cycles;
  return {{"verdict", "not-mirror"}, {"reason", std::move(reason)}};
}

json coxeter_type_to_json(const CoxeterType& t) {
  return {{"type", t.name()}, {"factors", t.factor_names()}, {"predicted_order", t.predicted_order}};
}

json certificate_to_json(const Graph& g, const MirrorCertificate& c, const CoxeterReport* coxeter) {
  json doc = embedding_to_json(g, c.embedding);
  doc["verdict"] = "mirror";
  json autos = json::array();
  for (const auto& a : c.automorphisms)
    autos.push_back({{"class", a.class_index},
                     {"vertex_perm", a.vertex_perm},
                     {"class_perm", a.class_perm},
                     {"flip_mask", a.flip_mask.to_string()}});
  doc["automorphisms"] = std::move(autos);
  json cycles = json::array();
  for (const auto& cyc : c.convex_cycles) cycles.push_back(cyc.vertices);
  doc["convex_cycles"] = std::move(cycles);
  if (coxeter) {
    if (coxeter->matrix) doc["coxeter_matrix"] = coxeter->matrix->entries();
    if (coxeter->type) {
      doc.update(coxeter_type_to_json(*coxeter->type));
      doc["order_check"] = coxeter->order_check;
    }
    if (!coxeter->error.empty()) doc["coxeter_error"] = coxeter->error;
  }
  return doc;
}

json recognition_to_json(const Graph& g, const Recognition& r, const CoxeterReport* coxeter) {
  if (const auto* cert = std::get_if<MirrorCertificate>(&r)) return certificate_to_json(g, *cert, coxeter);
  return reject_to_json(std::get<RejectReason>(r));
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("certificate: missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: field \"") + key + "\": " + e.what());
  }
}

}  // namespace

MirrorCertificate certificate_from_json(const Graph& g, const json& j) {
  if (field<std::string>(j, "verdict") != "mirror") throw ParseError("certificate: verdict is not \"mirror\"");
  MirrorCertificate c;
  auto& e = c.embedding;
  e.k = field<int>(j, "k");
  if (e.k < 0) throw ParseError("certificate: negative k");
  e.edges = g.edges();
  e.class_of.assign(e.edges.size(), -1);
  e.class_edges.assign(static_cast<std::size_t>(e.k), {});
  const auto class_of = field<std::map<std::string, int>>(j, "class_of");
  if (class_of.size() != e.edges.size()) throw ParseError("certificate: class_of does not list every edge exactly once");
  for (std::size_t idx = 0; idx < e.edges.size(); ++idx) {
    auto it = class_of.find(to_string(e.edges[idx]));
    if (it == class_of.end()) throw ParseError("certificate: class_of lacks edge " + to_string(e.edges[idx]));
    if (it->second < 0 || it->second >= e.k) throw ParseError("certificate: class index out of range");
    e.class_of[idx] = it->second;
    e.class_edges[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(idx));
  }
  for (const auto& s : field<std::vector<std::string>>(j, "coords")) {
    try {
      e.coords.push_back(BitVec::from_string(s));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("certificate: coords: ") + ex.what());
    }
  }

  for (const auto& item : field<json>(j, "automorphisms")) {
    MirrorAutomorphism a;
    a.class_index = field<int>(item, "class");
    a.vertex_perm = field<std::vector<Vertex>>(item, "vertex_perm");
    a.class_perm = field<std::vector<int>>(item, "class_perm");
    try {
      a.flip_mask = BitVec::from_string(field<std::string>(item, "flip_mask"));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("certificate: flip_mask: ") + ex.what());
    }
    c.automorphisms.push_back(std::move(a));
  }

  for (auto& verts : field<std::vector<std::vector<Vertex>>>(j, "convex_cycles")) {
    ConvexCycle cyc;
    cyc.vertices = std::move(verts);
    const auto len = cyc.vertices.size();
    for (std::size_t t = 0; t < len / 2; ++t) {
      const int idx = (cyc.vertices[t] >= 0 && cyc.vertices[t] < g.num_vertices() && cyc.vertices[t + 1] >= 0 &&
                       cyc.vertices[t + 1] < g.num_vertices())
                          ? g.edge_index(cyc.vertices[t], cyc.vertices[t + 1])
                          : -1;
      cyc.classes.push_back(idx >= 0 ? e.class_of[static_cast<std::size_t>(idx)] : -1);
    }
    c.convex_cycles.push_back(std::move(cyc));
  }
  return c;
}

RejectReason reject_from_json(const json& j) {
  if (field<std::string>(j, "verdict") != "not-mirror") throw ParseError("certificate: verdict is not \"not-mirror\"");
  const auto& reason = j.at("reason");
  RejectReason r;
  auto stage = reject_stage_from_string(field<std::string>(reason, "stage"));
  if (!stage) throw ParseError("certificate: unknown reject stage");
  r.stage = *stage;
  r.message = field<std::string>(reason, "message");
  if (reason.contains("class")) r.class_index = field<int>(reason, "class");
  if (reason.contains("other_class")) r.other_class = field<int>(reason, "other_class");
  if (reason.contains("edge")) {
    auto e = field<std::vector<int>>(reason, "edge");
    if (e.size() != 2) throw ParseError("certificate: edge witness must be a pair");
    r.edge = Edge(e[0], e[1]);
  }
  if (reason.contains("vertices")) {
    auto v = field<std::vector<int>>(reason, "vertices");
    if (v.empty() || v.size() > 2) throw ParseError("certificate: bad vertex witness");
    r.vertices = std::make_pair(v[0], v.size() == 2 ? v[1] : -1);
  }
  if (reason.contains("cycles")) r.cycles = field<std::vector<std::vector<Vertex>>>(reason, "cycles");
  return r;
}

CoxeterMatrix coxeter_matrix_from_json(const json& j) {
  const json* body = &j;
  if (j.is_object()) {
    if (j.contains("coxeter_matrix")) body = &j.at("coxeter_matrix");
    else if (j.contains("matrix")) body = &j.at("matrix");
    else throw ParseError("matrix JSON: expected an array or an object with \"matrix\"");
  }
  try {
    return CoxeterMatrix(body->get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace mirror
