#include "caskbridge/css/corpus.hpp"

#include <fstream>
#include <sstream>

#include "caskbridge/rdf/turtle.hpp"

namespace caskbridge::css {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

RuleCorpus parse_corpus(std::string_view forward_ttl, std::string_view inverse_json, std::string origin) {
  RuleCorpus corpus;
  corpus.origin = std::move(origin);
  try {
    corpus.forward = rml::parse_triples_maps(rdf::parse_turtle(forward_ttl, std::nullopt));
  } catch (const Error& e) {
    throw CorpusError(corpus.origin + "/forward.ttl: " + e.what());
  }
  for (const auto& map : corpus.forward) {
    const auto& source = map.source.source_ref;
    if (source != kCapabilitySource && source != kControlComponentSource) {
      throw CorpusError(corpus.origin + "/forward.ttl: triples map " + map.id + " reads unknown source '" + source +
                        "'");
    }
  }
  try {
    corpus.inverse = rdfex::parse_extraction_rules(inverse_json);
  } catch (const Error& e) {
    throw CorpusError(corpus.origin + "/inverse.json: " + e.what());
  }
  return corpus;
}

RuleCorpus load_corpus(const std::filesystem::path& dir) {
  return parse_corpus(read_file(dir / "forward.ttl"), read_file(dir / "inverse.json"), dir.string());
}

const RuleCorpus& default_corpus() {
  static const RuleCorpus corpus = parse_corpus(embedded_forward_rules(), embedded_inverse_rules(), "embedded");
  return corpus;
}

}  // namespace caskbridge::css
