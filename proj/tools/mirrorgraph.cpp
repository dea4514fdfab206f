// mirrorgraph: recognize mirror graphs and generate finite Coxeter families.
//
//   mirrorgraph recognize --input G.json [--oracle] [--output C.json]
//   mirrorgraph generate (--type NAME | --matrix M.json | --normals A.json | --example NAME)
//                        [--budget N] [--seed S] [--output G.json]
//   mirrorgraph classify --matrix M.json
//   mirrorgraph verify --input G.json --certificate C.json
//
// Exit codes: 0 success/accept, 1 reject (recognize/verify), 2 invalid input
// or budget exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirror/certificate.hpp"
#include "mirror/coxeter.hpp"
#include "mirror/generate.hpp"
#include "mirror/graph.hpp"
#include "mirror/oracle.hpp"
#include "mirror/recognition.hpp"

namespace {

using nlohmann::json;
using namespace mirror;

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
  std::string input;
  std::string output;
  std::string certificate;
  std::string type;
  std::string matrix;
  std::string normals;
  std::string example;
  int budget = kDefaultGroupBudget;
  std::uint64_t seed = 1;
  bool oracle = false;
  int verbosity = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void log(const RunConfig& cfg, const std::string& msg) {
  if (cfg.verbosity > 0) std::cerr << "mirrorgraph: " << msg << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Writes to a sibling temp file and renames it into place.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw UsageError("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

void check_output_writable(const std::string& path) {
  if (path.empty() || path == "-") return;
  namespace fs = std::filesystem;
  auto parent = fs::path(path).parent_path();
  if (parent.empty()) parent = ".";
  if (!fs::is_directory(parent)) throw UsageError("output directory " + parent.string() + " does not exist");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_recognize(const RunConfig& cfg) {
  check_output_writable(cfg.output);
  const Graph g = load_graph_file(cfg.input);
  log(cfg, "loaded graph with " + std::to_string(g.num_vertices()) + " vertices, " +
               std::to_string(g.num_edges()) + " edges");

  const auto t0 = std::chrono::steady_clock::now();
  const Recognition result = recognize(g);
  log(cfg, std::string("recognition ") + (accepted(result) ? "accepted" : "rejected") + " in " +
               std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()) + " s");

  int code = accepted(result) ? kExitOk : kExitReject;
  json doc;
  if (const auto* cert = std::get_if<MirrorCertificate>(&result)) {
    const auto report = analyze_coxeter(g, *cert);
    doc = certificate_to_json(g, *cert, &report);
    if (!report.error.empty()) {
      std::cerr << "mirrorgraph: consistency failure on an accepted graph: " << report.error << '\n';
      code = kExitInvalid;
    }
  } else {
    doc = reject_to_json(std::get<RejectReason>(result));
  }

  if (cfg.oracle) {
    try {
      const auto verdict = oracle::brute_force_mirror(g);
      const bool agrees = verdict.mirror == accepted(result);
      doc["oracle"] = {{"verdict", verdict.mirror ? "mirror" : "not-mirror"}, {"agrees", agrees}};
      if (!agrees) {
        std::cerr << "mirrorgraph: oracle disagrees with recognition\n";
        code = kExitInvalid;
      }
    } catch (const BudgetExceeded& e) {
      doc["oracle"] = {{"skipped", e.what()}};
    }
  }
  write_output(cfg.output, dump(doc));
  return code;
}

Arrangement load_arrangement(const std::string& path) {
  const json j = read_json_file(path);
  Arrangement a;
  try {
    a.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("normals")) {
      auto values = row.get<std::vector<double>>();
      a.normals.push_back(Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
    }
  } catch (const json::exception& e) {
    throw ParseError(path + ": arrangement JSON needs \"dim\" and \"normals\": " + e.what());
  }
  a.validate();
  return a;
}

int cmd_generate(const RunConfig& cfg) {
  check_output_writable(cfg.output);
  const int sources = !cfg.type.empty() + !cfg.matrix.empty() + !cfg.normals.empty() + !cfg.example.empty();
  if (sources != 1) throw UsageError("generate needs exactly one of --type, --matrix, --normals, --example");
  GenerateOptions options;
  options.budget = cfg.budget;
  options.seed = cfg.seed;

  json doc;
  if (!cfg.normals.empty()) {
    const auto tope = tope_graph(load_arrangement(cfg.normals), options);
    doc = json::parse(graph_to_json(tope.graph));
    doc["signs"] = tope.signs;
  } else {
    std::optional<Graph> g;
    if (!cfg.example.empty()) {
      g = named_example(cfg.example, options);
    } else if (!cfg.type.empty()) {
      CoxeterType type;
      try {
        type = parse_coxeter_type(cfg.type);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
      g = generate_cayley(standard_matrix(type), options);
    } else {
      g = generate_cayley(coxeter_matrix_from_json(read_json_file(cfg.matrix)), options);
    }
    doc = json::parse(graph_to_json(*g));
  }
  log(cfg, "generated " + std::to_string(doc["n"].get<int>()) + " vertices");
  write_output(cfg.output, dump(doc));
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
  const auto matrix = coxeter_matrix_from_json(read_json_file(cfg.matrix));
  json doc;
  try {
    doc = coxeter_type_to_json(classify(matrix));
    doc["finite"] = true;
  } catch (const NotFiniteType& e) {
    doc = {{"finite", false}, {"error", std::string("NotFiniteType: ") + e.what()}, {"component", e.component()}};
  }
  write_output(cfg.output, dump(doc));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const Graph g = load_graph_file(cfg.input);
  const json doc = read_json_file(cfg.certificate);
  const auto verdict = doc.value("verdict", std::string{});
  json report;
  bool ok = false;
  if (verdict == "mirror") {
    const auto cert = certificate_from_json(g, doc);
    const auto result = verify_certificate(g, cert);
    ok = result.ok;
    if (!ok) report["failure"] = result.failure;
    if (ok && doc.contains("coxeter_matrix")) {
      const auto coxeter = analyze_coxeter(g, cert);
      const bool matches = coxeter.matrix && coxeter.type &&
                           doc["coxeter_matrix"] == json(coxeter.matrix->entries()) &&
                           doc.value("type", std::string{}) == coxeter.type->name() &&
                           doc.value("order_check", false) == coxeter.order_check;
      if (!matches) {
        ok = false;
        report["failure"] = "Coxeter data does not match the certificate";
      }
    }
  } else if (verdict == "not-mirror") {
    const auto claimed = reject_from_json(doc);
    const auto result = recognize(g);
    ok = !accepted(result) && std::get<RejectReason>(result) == claimed;
    if (!ok) report["failure"] = "reject reason does not reproduce";
  } else {
    throw ParseError("certificate: verdict must be \"mirror\" or \"not-mirror\"");
  }
  report["valid"] = ok;
  report["verdict"] = verdict;
  write_output(cfg.output, dump(report));
  return ok ? kExitOk : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize mirror graphs and generate finite Coxeter groups' Cayley and tope graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("-v,--verbose", cfg.verbosity, "Log progress to stderr");

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide whether a graph is a mirror graph");
  recognize_cmd->add_option("--input", cfg.input, "Graph JSON")->required()->check(CLI::ExistingFile);
  recognize_cmd->add_option("--output", cfg.output, "Certificate JSON (default: stdout)");
  recognize_cmd->add_flag("--oracle", cfg.oracle, "Cross-check with the brute-force test (n <= 16)");

  auto* generate_cmd = app.add_subcommand("generate", "Generate a Cayley graph or a tope graph");
  generate_cmd->add_option("--type", cfg.type, "Coxeter type, e.g. A3, B3, I2_6, \"A2 x A1\"");
  generate_cmd->add_option("--matrix", cfg.matrix, "Coxeter matrix JSON")->check(CLI::ExistingFile);
  generate_cmd->add_option("--normals", cfg.normals, "Arrangement JSON {\"dim\", \"normals\"}")->check(CLI::ExistingFile);
  generate_cmd->add_option("--example", cfg.example, "Named corpus graph, e.g. Q3, C10, path4, K23");
  generate_cmd->add_option("--budget", cfg.budget, "Group element cap")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", cfg.seed, "Seed for the generic point of tope graphs");
  generate_cmd->add_option("--output", cfg.output, "Graph JSON (default: stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a Coxeter matrix");
  classify_cmd->add_option("--matrix", cfg.matrix, "Coxeter matrix JSON")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--output", cfg.output, "Result JSON (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate against its graph");
  verify_cmd->add_option("--input", cfg.input, "Graph JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--certificate", cfg.certificate, "Certificate JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--output", cfg.output, "Report JSON (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*recognize_cmd) return cmd_recognize(cfg);
    if (*generate_cmd) return cmd_generate(cfg);
    if (*classify_cmd) return cmd_classify(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
  } catch (const ParseError& e) {
    std::cerr << "mirrorgraph: ParseError: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    std::cerr << "mirrorgraph: ValidationError: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    std::cerr << "mirrorgraph: BudgetExceeded: " << e.what() << '\n';
  } catch (const NotFiniteType& e) {
    std::cerr << "mirrorgraph: NotFiniteType: " << e.what() << '\n';
  } catch (const NotReflectionArrangement& e) {
    std::cerr << "mirrorgraph: NotReflectionArrangement: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "mirrorgraph: " << e.what() << '\n';
  }
  return kExitInvalid;
}
