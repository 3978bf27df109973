// caskbridge: AAS JSON <-> capability/skill ontology conversion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "caskbridge/css/mapping.hpp"
#include "caskbridge/rdf/turtle.hpp"
#include "caskbridge/roundtrip/report.hpp"

namespace {

using namespace caskbridge;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out.flush()) throw Error("cannot write " + path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

struct Config {
  std::string rules_dir;
  std::string input;
  std::string output;
  std::string base;
  std::string conformance{css::kDefaultConformance};
  css::SkeletonConfig skeleton;
  std::string report;
  std::string format{"json"};
  std::string loss_report;
  bool verbose = false;
};

std::optional<css::RuleCorpus> custom_corpus(const Config& config) {
  if (!config.rules_dir.empty()) return css::load_corpus(config.rules_dir);
  if (const char* env = std::getenv("CASKBRIDGE_RULES"); env && *env) return css::load_corpus(env);
  return std::nullopt;
}

void report_forward(const css::ForwardOutput& out, bool verbose) {
  for (const auto& d : out.diagnostics) {
    std::cerr << "dangling reference: " << d.relationship << ": " << d.message;
    if (!d.chain.empty()) std::cerr << " (" << d.chain << ")";
    std::cerr << "\n";
  }
  // Optional fields absent from the input are routine; list them on request.
  if (verbose) {
    std::cerr << rml::format_report(out.skipped);
  } else if (!out.skipped.empty()) {
    std::cerr << out.skipped.size() << " optional reference(s) skipped, --verbose lists them\n";
  }
}

int aas2owl(const Config& config) {
  auto corpus = custom_corpus(config);
  css::ForwardOptions options;
  options.corpus = corpus ? &*corpus : nullptr;
  options.conformance = config.conformance;
  rdf::Iri base(config.base);
  auto out = css::aas_to_onto(json::parse_json(read_file(config.input)), base, options);
  report_forward(out, config.verbose);
  write_output(config.output, rdf::serialize_turtle(out.graph));
  return 0;
}

int owl2aas(const Config& config) {
  auto corpus = custom_corpus(config);
  auto graph = rdf::parse_turtle(read_file(config.input));
  auto out = css::onto_to_aas(graph, config.skeleton, corpus ? &*corpus : nullptr);
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  if (config.loss_report.empty()) {
    std::cerr << out.ledger.to_text();
  } else {
    write_file(config.loss_report, out.ledger.to_text());
  }
  write_output(config.output, json::write_json(out.environment));
  return 0;
}

int run_roundtrip(const Config& config) {
  auto corpus = custom_corpus(config);
  roundtrip::RoundtripOptions options;
  options.corpus = corpus ? &*corpus : nullptr;
  options.conformance = config.conformance;
  if (!config.base.empty()) options.base = rdf::Iri(config.base);
  auto report = roundtrip::check_roundtrip(json::parse_json(read_file(config.input)), options);
  std::string text = config.format == "text" ? roundtrip::report_to_text(report)
                                             : json::write_json(roundtrip::report_to_json(report));
  write_output(config.report, text);
  return report.ok() ? 0 : 1;
}

int validate_rules(const Config& config) {
  auto corpus = custom_corpus(config);
  const css::RuleCorpus& checked = corpus ? *corpus : css::default_corpus();
  std::cout << checked.origin << ": " << checked.forward.size() << " forward maps, " << checked.inverse.size()
            << " inverse rules\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convert between AAS capability/control component submodels and the capability and skill ontology"};
  app.require_subcommand(1);
  Config config;
  app.add_option("--rules", config.rules_dir, "Rule directory (forward.ttl, inverse.json)");
  app.add_flag("-v,--verbose", config.verbose, "Report every skipped optional reference");

  auto* a2o = app.add_subcommand("aas2owl", "AAS environment JSON to Turtle");
  a2o->add_option("-i,--input", config.input, "AAS environment JSON")->required();
  a2o->add_option("-o,--output", config.output, "Turtle output ('-' for stdout)")->required();
  a2o->add_option("--base", config.base, "Namespace for generated individuals")->required();
  a2o->add_option("--conformance", config.conformance, "State machine conformance class IRI");

  auto* o2a = app.add_subcommand("owl2aas", "Turtle to AAS environment JSON");
  o2a->add_option("-i,--input", config.input, "Ontology in Turtle")->required();
  o2a->add_option("-o,--output", config.output, "JSON output ('-' for stdout)")->required();
  o2a->add_option("--aas-id", config.skeleton.aas_id, "Identifier of the generated AAS")->required();
  o2a->add_option("--capability-submodel-id", config.skeleton.capability_submodel_id, "Capability submodel id");
  o2a->add_option("--control-component-submodel-id", config.skeleton.control_component_submodel_id,
                  "Control component submodel id");
  o2a->add_option("--loss-report", config.loss_report, "Write the loss ledger here instead of stderr");

  auto* rt = app.add_subcommand("roundtrip", "Forward, inverse and forward again; report differences");
  rt->add_option("-i,--input", config.input, "AAS environment JSON")->required();
  rt->add_option("--report", config.report, "Report output (default stdout)");
  rt->add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  rt->add_option("--base", config.base, "Namespace for generated individuals");
  rt->add_option("--conformance", config.conformance, "State machine conformance class IRI");

  auto* vr = app.add_subcommand("validate-rules", "Parse the rule corpus and report errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (a2o->parsed()) return aas2owl(config);
    if (o2a->parsed()) return owl2aas(config);
    if (rt->parsed()) return run_roundtrip(config);
    if (vr->parsed()) return validate_rules(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
