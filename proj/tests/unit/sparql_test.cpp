#include <gtest/gtest.h>

#include "caskbridge/rdf/turtle.hpp"
#include "caskbridge/sparql/select.hpp"
#include "files.hpp"
#include "oracle.hpp"

namespace caskbridge::sparql {
namespace {

using caskbridge::testing::fixture;
using caskbridge::testing::read_file;

const char* kData = R"(
@prefix ex: <http://x.org/#> .
ex:a ex:p ex:b ; ex:name "A" .
ex:b ex:p ex:c ; ex:name "B" .
ex:c ex:name "C"@en .
)";

std::vector<std::string> column(const std::vector<BindingSet>& rows, const std::string& var) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.at(var).str());
  return out;
}

TEST(QueryParse, Structure) {
  SelectQuery q = parse_query(R"(PREFIX ex: <http://x.org/#>
    select ?s ?n where { ?s ex:p ?o ; ex:name ?n , "x" . ?o a ex:C BIND(STR(?s) AS ?t) })");
  EXPECT_EQ(q.variables, (std::vector<std::string>{"s", "n"}));
  EXPECT_EQ(q.patterns.size(), 4u);
  ASSERT_EQ(q.binds.size(), 1u);
  EXPECT_EQ(q.binds[0].target, "t");
  EXPECT_EQ(q.binds[0].expression.op, Expression::Op::kStr);
  EXPECT_EQ(q.prefixes.at("ex"), "http://x.org/#");
}

TEST(QueryParse, StarProjectsInOrderOfAppearance) {
  SelectQuery q = parse_query("SELECT * { ?b <http://x.org/p> ?a . ?a <http://x.org/q> ?c BIND(STR(?a) AS ?d) }");
  EXPECT_EQ(q.variables, (std::vector<std::string>{"b", "a", "c", "d"}));
}

TEST(QueryParse, UnsupportedFeaturesNamed) {
  auto token = [](const std::string& text) {
    try {
      parse_query(text);
    } catch (const UnsupportedFeature& e) {
      return e.token();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(token("SELECT ?s WHERE { ?s ?p ?o FILTER(?o) }"), "FILTER");
  EXPECT_EQ(token("SELECT ?s WHERE { ?s ?p ?o OPTIONAL { ?s ?p ?o } }"), "OPTIONAL");
  EXPECT_EQ(token("SELECT ?s WHERE { ?s ?p ?o } LIMIT 1"), "LIMIT");
  EXPECT_EQ(token("SELECT ?s WHERE { ?s ?p ?o } ORDER BY ?s"), "ORDER");
  EXPECT_EQ(token("CONSTRUCT { ?s ?p ?o } WHERE { ?s ?p ?o }"), "CONSTRUCT");
  EXPECT_EQ(token("SELECT ?s WHERE { ?s <http://x.org/a>/<http://x.org/b> ?o }"), "property path");
  EXPECT_EQ(token("SELECT ?s WHERE { ?s ?p [ ?q ?r ] }"), "blank node in pattern");
}

TEST(QueryParse, SyntaxErrors) {
  EXPECT_THROW(parse_query("SELECT WHERE { ?s ?p ?o }"), SyntaxError);
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ?p }"), SyntaxError);
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ex:p ?o }"), SyntaxError);  // undeclared prefix
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ?p ?o BIND(STR(?o) AS ?s) }"), SyntaxError);
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ?p ?o "), SyntaxError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?s ?p ?o }"), SyntaxError);  // projects an unknown variable
}

TEST(Evaluate, JoinsAndLiterals) {
  rdf::Graph g = rdf::parse_turtle(kData);
  auto rows = evaluate_select(parse_query(R"(PREFIX ex: <http://x.org/#>
      SELECT ?x ?n WHERE { ?x ex:p ?y . ?y ex:name ?n })"),
                              g);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(column(rows, "x"), (std::vector<std::string>{"<http://x.org/#a>", "<http://x.org/#b>"}));
  EXPECT_EQ(column(rows, "n"), (std::vector<std::string>{"\"B\"", "\"C\"@en"}));

  auto tagged = evaluate_select(parse_query(R"(PREFIX ex: <http://x.org/#> SELECT ?s { ?s ex:name "C"@en })"), g);
  EXPECT_EQ(column(tagged, "s"), std::vector<std::string>{"<http://x.org/#c>"});
  auto plain = evaluate_select(parse_query(R"(PREFIX ex: <http://x.org/#> SELECT ?s { ?s ex:name "C" })"), g);
  EXPECT_TRUE(plain.empty());
}

TEST(Evaluate, RepeatedVariableMustAgree) {
  rdf::Graph g = rdf::parse_turtle("<http://x.org/a> <http://x.org/p> <http://x.org/a> . "
                                   "<http://x.org/a> <http://x.org/p> <http://x.org/b> .");
  auto rows = evaluate_select(parse_query("SELECT ?s { ?s <http://x.org/p> ?s }"), g);
  EXPECT_EQ(column(rows, "s"), std::vector<std::string>{"<http://x.org/a>"});
}

TEST(Evaluate, BindStrAfterAndDistinctProjection) {
  rdf::Graph g = rdf::parse_turtle(kData);
  auto rows = evaluate_select(parse_query(R"(PREFIX ex: <http://x.org/#>
      SELECT DISTINCT ?local WHERE { ?s ex:name ?n BIND(STRAFTER(STR(?s), "#") AS ?local) })"),
                              g);
  EXPECT_EQ(column(rows, "local"), (std::vector<std::string>{"\"a\"", "\"b\"", "\"c\""}));
  auto projected = evaluate_select(parse_query("PREFIX ex: <http://x.org/#> SELECT ?p { ?s ?p ?o }"), g);
  EXPECT_EQ(projected.size(), 2u);
}

TEST(LocalName, Fallbacks) {
  EXPECT_EQ(local_name_after("http://x.org/ns#Drilling", "#"), "Drilling");
  EXPECT_EQ(local_name_after("http://x.org/ns/Drilling", "#"), "Drilling");
  EXPECT_EQ(local_name_after("urn:x:Drilling", "#"), "urn:x:Drilling");
  EXPECT_EQ(local_name_after("abc", "z"), "");
  EXPECT_EQ(local_name_after("a-b-c", "-"), "b-c");
}

// Answers computed by rdflib over the same data.
TEST(SparqlOracle, MatchesRdflibResults) {
  rdf::Graph g = rdf::parse_turtle(read_file(fixture("oracle/data.ttl")));
  json::Json cases = json::parse_json(read_file(fixture("oracle/results.json")));
  ASSERT_EQ(cases.as_array().size(), 10u);
  for (const auto& c : cases.as_array()) {
    std::vector<std::string> vars;
    for (const auto& v : c.find("variables")->as_array()) vars.push_back(v.as_string());
    caskbridge::testing::Rows expected;
    for (const auto& row : c.find("rows")->as_array()) {
      std::vector<std::string> r;
      for (const auto& cell : row.as_array()) r.push_back(cell.as_string());
      expected.push_back(r);
    }
    auto actual = caskbridge::testing::project(evaluate_select(parse_query(c.find("query")->as_string()), g), vars);
    std::sort(actual.begin(), actual.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(actual, expected) << c.find("query")->as_string();
  }
}

TEST(SparqlOracle, RandomCasesMatchBruteForce) {
  caskbridge::testing::Rng rng(5);
  for (int i = 0; i < 150; ++i) {
    rdf::Graph g = caskbridge::testing::random_join_graph(rng, 30);
    auto c = caskbridge::testing::random_query(rng, 3);
    auto actual = caskbridge::testing::project(evaluate_select(parse_query(c.query), g), c.variables);
    ASSERT_EQ(actual, caskbridge::testing::brute_force_select(c, g)) << c.query;
  }
}

}  // namespace
}  // namespace caskbridge::sparql
