#include <gtest/gtest.h>

#include "caskbridge/rdf/turtle.hpp"
#include "caskbridge/roundtrip/report.hpp"
#include "files.hpp"
#include "random_data.hpp"

namespace caskbridge::roundtrip {
namespace {

using caskbridge::testing::fixture;
using caskbridge::testing::read_file;

TEST(GraphDiff, IsomorphicGraphsAreEqual) {
  rdf::Graph a = rdf::parse_turtle("_:x <http://p.org/p> <http://o.org/o> . _:x <http://p.org/q> \"v\" .");
  rdf::Graph b = rdf::parse_turtle("_:other <http://p.org/q> \"v\" . _:other <http://p.org/p> <http://o.org/o> .");
  EXPECT_TRUE(diff_graphs(a, b).empty());
}

TEST(GraphDiff, SortedSetDifferences) {
  rdf::Graph a = rdf::parse_turtle("<http://s/2> <http://p/p> 1 . <http://s/1> <http://p/p> 1 . <http://s/0> <http://p/p> 0 .");
  rdf::Graph b = rdf::parse_turtle("<http://s/0> <http://p/p> 0 . <http://s/3> <http://p/p> 3 .");
  GraphDiff d = diff_graphs(a, b);
  ASSERT_EQ(d.only_left.size(), 2u);
  EXPECT_EQ(d.only_left[0].subject.str(), "<http://s/1>");
  EXPECT_EQ(d.only_left[1].subject.str(), "<http://s/2>");
  ASSERT_EQ(d.only_right.size(), 1u);
  EXPECT_EQ(d.only_right[0].subject.str(), "<http://s/3>");
}

TEST(DocDiff, KindsAndLocations) {
  json::Json a = json::parse_json(R"({"x": 1, "list": [1, 2], "o": {"k": "v"}, "gone": null})");
  json::Json b = json::parse_json(R"({"o": {"k": "w"}, "list": [1, 2, 3], "x": "1", "new": true})");
  DocDiff d = diff_docs(a, b);
  ASSERT_EQ(d.entries.size(), 5u);
  auto has = [&](const std::string& loc, DiffKind kind) {
    for (const auto& e : d.entries)
      if (e.location == loc && e.kind == kind) return true;
    return false;
  };
  EXPECT_TRUE(has("$['x']", DiffKind::kValueMismatch));
  EXPECT_TRUE(has("$['list'][2]", DiffKind::kExtra));
  EXPECT_TRUE(has("$['o']['k']", DiffKind::kValueMismatch));
  EXPECT_TRUE(has("$['gone']", DiffKind::kMissing));
  EXPECT_TRUE(has("$['new']", DiffKind::kExtra));
  EXPECT_TRUE(diff_docs(b, b).empty());
  EXPECT_TRUE(diff_docs(json::parse_json(R"({"a": 1, "b": 2})"), json::parse_json(R"({"b": 2, "a": 1})")).empty());
  EXPECT_FALSE(diff_docs(json::parse_json("[1, 2]"), json::parse_json("[2, 1]")).empty());
  EXPECT_EQ(to_string(DiffKind::kMissing), "Missing");
}

TEST(Roundtrip, GoldenEnvironment) {
  RoundtripOptions options;
  options.base = rdf::Iri("http://example.org/css#");
  auto report = check_roundtrip(json::parse_json(read_file(fixture("golden_env.json"))), options);
  EXPECT_TRUE(report.ok()) << report_to_text(report);
  EXPECT_EQ(report.g1_size, 31u);
  EXPECT_EQ(report.g2_size, 31u);
  EXPECT_TRUE(report.diagnostics.empty());
}

TEST(Roundtrip, TextReport) {
  auto report = check_roundtrip(json::parse_json(read_file(fixture("golden_env.json"))));
  std::string text = report_to_text(report);
  EXPECT_EQ(text.rfind("roundtrip: OK (G1 31 triples, G2 31 triples)\n", 0), 0u) << text;
  EXPECT_NE(text.find("loss ledger:\n  StateMachine: "), std::string::npos);
  EXPECT_NE(text.find("  assumption: "), std::string::npos);
}

TEST(Roundtrip, JsonReportKeys) {
  auto report = check_roundtrip(json::parse_json(read_file(fixture("golden_env.json"))));
  json::Json doc = report_to_json(report);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.as_object()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"ok", "g1Triples", "g2Triples", "diff", "lossLedger", "assumptions",
                                            "diagnostics", "warnings"}));
  EXPECT_TRUE(doc.find("ok")->as_bool());
  EXPECT_EQ(doc.find("g1Triples")->number_text(), "31");
  EXPECT_TRUE(doc.find("diff")->find("onlyLeft")->as_array().empty());
  EXPECT_EQ(doc.find("lossLedger")->as_array()[0].string_member("lossiness"), "Partial");
}

TEST(Roundtrip, DifferencesReported) {
  // A constraint without a property reference has no AAS rendering.
  json::Json env = json::parse_json(read_file(fixture("golden_env.json")));
  auto before = check_roundtrip(env);
  ASSERT_TRUE(before.ok());
  auto cond = json::evaluate_path(env, json::compile_path("$..value[?(@.idShort=='MaxDiameter')]"));
  ASSERT_EQ(cond.size(), 1u);
  json::Json* element = json::navigate(env, cond[0].location);
  // Cut the property side of the constraint down to the submodel itself.
  element->find("second")->find("keys")->as_array().resize(1);
  auto after = check_roundtrip(env);
  EXPECT_FALSE(after.ok());
  EXPECT_FALSE(after.diagnostics.empty());
  EXPECT_NE(report_to_text(after).find("only in G1: "), std::string::npos) << report_to_text(after);
}

TEST(Roundtrip, RandomEnvironmentsSmall) {
  caskbridge::testing::Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    json::Json env = caskbridge::testing::random_aas_env(rng, 15);
    auto report = check_roundtrip(env);
    ASSERT_TRUE(report.ok()) << report_to_text(report) << json::write_json(env);
  }
}

}  // namespace
}  // namespace caskbridge::roundtrip
