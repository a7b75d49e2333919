#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "vba/vba.hpp"

using namespace vba;
using vba::io::json;

TEST_CASE("framework documents round-trip") {
  const Vaf vaf = support::running_vaf();
  const json doc = io::to_json(vaf);
  CHECK(io::parse_vaf(doc) == vaf);
  // Declared orders survive the trip.
  CHECK(doc.begin().key() == "values");
  CHECK(doc["values"][0] == "ER");
  CHECK(doc["arguments"][0]["id"] == "A");
}

TEST_CASE("audience, graph, and profile documents round-trip") {
  const Audience a = support::load_audience_fixture("expert1.json");
  CHECK(io::parse_audience(io::to_json(a)) == a);

  const AttackGraph g = support::load_graph_fixture("fig2a.json");
  CHECK(io::parse_graph(io::to_json(g)) == g);

  const auto pp = io::parse_preference_profile(
      support::load_fixture("example2_profile.json"));
  CHECK(io::parse_preference_profile(io::to_json(pp)) == pp);

  const auto gp = io::parse_graph_profile(
      support::load_fixture("experts_graph_profile.json"));
  CHECK(io::parse_graph_profile(io::to_json(gp)) == gp);
}

TEST_CASE("rule documents round-trip") {
  const PrefRuleSpec borda =
      io::parse_pref_rule(support::load_fixture("example4_rule.json"));
  const json borda_doc = io::to_json(borda);
  CHECK(borda_doc["rule"] == "borda");
  CHECK(borda_doc["tiebreak"][0] == "ER");
  CHECK(io::to_json(io::parse_pref_rule(borda_doc)) == borda_doc);

  const json dict{{"rule", "dictator"}, {"index", 2}};
  CHECK(io::to_json(io::parse_pref_rule(dict)) == dict);

  const json quota{{"rule", "quota"}, {"q", "2/4"}};
  CHECK(io::to_json(io::parse_graph_rule(quota))["q"] == "1/2");
  const json majority{{"rule", "majority"}};
  CHECK(io::to_json(io::parse_graph_rule(majority)) == majority);
  const json rep{{"rule", "representative"}};
  CHECK(io::to_json(io::parse_graph_rule(rep)) == rep);
  const json gdict{{"rule", "graph-dictator"}, {"index", 1}};
  CHECK(io::to_json(io::parse_graph_rule(gdict)) == gdict);

  CHECK_THROWS_AS(io::parse_graph_rule(json{{"rule", "quota"}, {"q", "3/2"}}),
                  ParseError);
  CHECK_THROWS_AS(io::parse_pref_rule(json{{"rule", "quota"}, {"q", "1/2"}}),
                  ParseError);
}

TEST_CASE("bounds documents fill defaults for missing fields") {
  const SearchBounds defaults = io::parse_bounds(json::object());
  CHECK(defaults.max_values == 3);
  CHECK(defaults.max_agents == 2);
  CHECK(defaults.max_arguments == 4);

  const SearchBounds b =
      io::parse_bounds(support::load_fixture("bounds_graph.json"));
  CHECK(b.max_arguments == 2);
  CHECK(b.max_agents == 3);
  CHECK(b.max_values == 3);

  const json full = io::to_json(b);
  CHECK(io::to_json(io::parse_bounds(full)) == full);
}

TEST_CASE("document kinds are sniffed from their fields") {
  CHECK(io::detect_kind(support::load_fixture("running_vaf.json")) == "vaf");
  CHECK(io::detect_kind(support::load_fixture("fig2a.json")) == "graph");
  CHECK(io::detect_kind(support::load_fixture("expert1.json")) == "audience");
  CHECK(io::detect_kind(support::load_fixture("example2_profile.json")) ==
        "audience_profile");
  CHECK(io::detect_kind(support::load_fixture("experts_graph_profile.json")) ==
        "graph_profile");
  CHECK(io::detect_kind(support::load_fixture("example4_rule.json")) ==
        "rule");
  CHECK(io::detect_kind(support::load_fixture("bounds_pref.json")) ==
        "bounds");
  CHECK_THROWS_AS(io::detect_kind(json{{"stuff", 1}}), ParseError);
  CHECK_THROWS_AS(io::detect_kind(json::array()), ParseError);
}

TEST_CASE("malformed documents raise parse errors with field names") {
  CHECK_THROWS_AS(io::parse_text("not json"), ParseError);
  CHECK_THROWS_WITH(io::parse_vaf(json{{"values", json::array()}}),
                    Catch::Matchers::ContainsSubstring("arguments"));
  CHECK_THROWS_AS(io::parse_audience(json{{"order", "EV"}}), ParseError);
  CHECK_THROWS_AS(
      io::parse_graph(json{{"arguments", json::array()},
                           {"edges", json::array({json::array({"a"})})}}),
      ParseError);
  CHECK_THROWS_AS(io::parse_pref_rule(json{{"rule", "borda"},
                                           {"tiebreak", 3}}),
                  ParseError);
  CHECK_THROWS_AS(io::parse_bounds(json{{"max_values", -1}}), ParseError);
}

TEST_CASE("framework files reject broken invariants as exit-2 errors") {
  // Dangling attack endpoint.
  json doc = support::load_fixture("running_vaf.json");
  doc["attacks"].push_back(json::array({"A", "ZZ"}));
  CHECK_THROWS_AS(io::parse_vaf(doc), InvariantViolation);

  // Unused value.
  json doc2 = support::load_fixture("running_vaf.json");
  doc2["values"].push_back("XX");
  CHECK_THROWS_AS(io::parse_vaf(doc2), InvariantViolation);
}

TEST_CASE("reports serialize their diagnosis") {
  const Vaf cycle4 = io::parse_vaf(support::load_fixture("cycle4.json"));
  const auto report =
      derive_constraints(cycle4, AttackGraph(cycle4.arguments(), {}));
  const json doc = io::to_json(report);
  CHECK(doc["status"] == "cyclic-constraints");
  CHECK(doc["cycle"].size() == 4);
  CHECK(doc["constraints"].size() == 4);

  const auto ok = derive_constraints(
      support::running_vaf(), support::load_graph_fixture("fig3.json"));
  CHECK(io::to_json(ok)["status"] == "justified");
}

TEST_CASE("verdict documents carry replayable witnesses") {
  const Verdict v = check_pref_axiom(
      PrefRuleSpec{BordaRule{}}, PrefAxiom::independence,
      io::parse_bounds(support::load_fixture("bounds_pref.json")));
  const json doc = io::to_json(v);
  CHECK(doc["status"] == "fails");
  CHECK(doc["checked"].is_number_unsigned());
  REQUIRE(doc.contains("witness"));
  const json& w = doc["witness"];
  const auto profile = io::parse_preference_profile(w["preference-profile"]);
  const auto other =
      io::parse_preference_profile(w["other-preference-profile"]);
  CHECK(profile.size() == other.size());
  CHECK(w.contains("value-pair"));
  CHECK(w.contains("audience-output"));
  CHECK(w.contains("other-audience-output"));
}
