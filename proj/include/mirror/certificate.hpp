#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mirror/coxeter.hpp"
#include "mirror/graph.hpp"
#include "mirror/recognition.hpp"

namespace mirror {

// Coxeter data derived from an accepted certificate.
struct CoxeterReport {
  std::optional<CoxeterMatrix> matrix;
  std::optional<CoxeterType> type;
  bool order_check = false;
  std::string error;  // set when extraction or classification failed
};

CoxeterReport analyze_coxeter(const Graph& g, const MirrorCertificate& c);

nlohmann::json embedding_to_json(const Graph& g, const ThetaEmbedding& e);
nlohmann::json reject_to_json(const RejectReason& r);
// Full certificate document; keys are emitted in sorted order.
nlohmann::json certificate_to_json(const Graph& g, const MirrorCertificate& c, const CoxeterReport* coxeter = nullptr);
nlohmann::json recognition_to_json(const Graph& g, const Recognition& r, const CoxeterReport* coxeter = nullptr);

// Rebuilds an accept certificate for re-verification. Throws ParseError.
MirrorCertificate certificate_from_json(const Graph& g, const nlohmann::json& j);
RejectReason reject_from_json(const nlohmann::json& j);

CoxeterMatrix coxeter_matrix_from_json(const nlohmann::json& j);
nlohmann::json coxeter_type_to_json(const CoxeterType& t);

}  // namespace mirror
