#include "caskbridge/roundtrip/report.hpp"

namespace caskbridge::roundtrip {

RoundtripReport check_roundtrip(const json::Json& env, const RoundtripOptions& options) {
  css::ForwardOptions forward;
  forward.corpus = options.corpus;
  forward.conformance = options.conformance;

  RoundtripReport report;
  auto g1 = css::aas_to_onto(env, options.base, forward);
  auto e2 = css::onto_to_aas(g1.graph, options.skeleton, options.corpus, options.base);
  auto g2 = css::aas_to_onto(e2.environment, options.base, forward);

  report.g1_size = g1.graph.size();
  report.g2_size = g2.graph.size();
  report.diff = diff_graphs(g1.graph, g2.graph);
  report.ledger = css::build_loss_ledger(g1.graph, g2.graph, e2.environment);
  report.diagnostics = std::move(g1.diagnostics);
  report.diagnostics.insert(report.diagnostics.end(), g2.diagnostics.begin(), g2.diagnostics.end());
  report.warnings = std::move(e2.warnings);
  return report;
}

json::Json report_to_json(const RoundtripReport& report) {
  auto triples = [](const std::vector<rdf::Triple>& list) {
    json::Json out = json::Json::array();
    for (const auto& t : list) out.push_back(rdf::to_string(t));
    return out;
  };
  json::Json ledger = json::Json::array();
  for (const auto& e : report.ledger.entries) {
    ledger.push_back(json::Json(json::Json::Object{{"row", e.row},
                                                   {"lossiness", css::to_string(e.lossiness)},
                                                   {"focus", e.focus},
                                                   {"triples", json::Json::number(std::to_string(e.triples))},
                                                   {"note", e.note}}));
  }
  json::Json assumptions = json::Json::array();
  for (const auto& a : report.ledger.assumptions) assumptions.push_back(a);
  json::Json diagnostics = json::Json::array();
  for (const auto& d : report.diagnostics) {
    diagnostics.push_back(
        json::Json(json::Json::Object{{"relationship", d.relationship}, {"chain", d.chain}, {"message", d.message}}));
  }
  json::Json warnings = json::Json::array();
  for (const auto& w : report.warnings) warnings.push_back(w);

  return json::Json(json::Json::Object{
      {"ok", report.ok()},
      {"g1Triples", json::Json::number(std::to_string(report.g1_size))},
      {"g2Triples", json::Json::number(std::to_string(report.g2_size))},
      {"diff", json::Json(json::Json::Object{{"onlyLeft", triples(report.diff.only_left)},
                                             {"onlyRight", triples(report.diff.only_right)}})},
      {"lossLedger", std::move(ledger)},
      {"assumptions", std::move(assumptions)},
      {"diagnostics", std::move(diagnostics)},
      {"warnings", std::move(warnings)}});
}

std::string report_to_text(const RoundtripReport& report) {
  std::string out = std::string("roundtrip: ") + (report.ok() ? "OK" : "DIFFERENCES") + " (G1 " +
                    std::to_string(report.g1_size) + " triples, G2 " + std::to_string(report.g2_size) +
                    " triples)\n";
  for (const auto& t : report.diff.only_left) out += "only in G1: " + rdf::to_string(t) + "\n";
  for (const auto& t : report.diff.only_right) out += "only in G2: " + rdf::to_string(t) + "\n";
  if (!report.ledger.empty()) out += "loss ledger:\n";
  std::string ledger = report.ledger.to_text();
  std::size_t start = 0;
  while (start < ledger.size()) {
    auto end = ledger.find('\n', start);
    out += "  " + ledger.substr(start, end - start) + "\n";
    start = end + 1;
  }
  for (const auto& d : report.diagnostics) {
    out += "diagnostic: " + d.relationship + ": " + d.message + (d.chain.empty() ? "" : " (" + d.chain + ")") + "\n";
  }
  for (const auto& w : report.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace caskbridge::roundtrip
