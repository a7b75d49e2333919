#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "vba/vba.hpp"

using namespace vba;

namespace {

std::pair<ValueId, ValueId> c(const char* u, const char* w) {
  return {ValueId(u), ValueId(w)};
}

/// Oracle: all audiences whose induced graph equals af.
std::vector<Audience> brute_justifying(const Vaf& vaf, const AttackGraph& af) {
  std::vector<Audience> out;
  for (const auto& a : all_audiences(vaf))
    if (induce_defeat_graph(vaf, a) == af) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("constraints derived from the first expert's graph") {
  const Vaf vaf = support::running_vaf();
  const auto report =
      derive_constraints(vaf, support::load_graph_fixture("fig2a.json"));
  REQUIRE(report.status == JustificationStatus::justified);
  CHECK(report.justified());
  // Sorted by declared value-index pair.
  CHECK(report.constraints.constraints ==
        std::vector<std::pair<ValueId, ValueId>>{
            c("SF", "ER"), c("EV", "ER"), c("EV", "SF"), c("EV", "IE"),
            c("IE", "ER")});
}

TEST_CASE("graphs outside the attack relation are rejected first") {
  const Vaf vaf = support::running_vaf();
  AttackGraph bad(vaf.arguments(),
                  {{ArgumentId("A"), ArgumentId("B")},
                   {ArgumentId("C"), ArgumentId("B")}});
  const auto report = derive_constraints(vaf, bad);
  CHECK(report.status == JustificationStatus::not_subgraph);
  REQUIRE(report.offending_edge.has_value());
  CHECK(*report.offending_edge == Edge(ArgumentId("A"), ArgumentId("B")));
  CHECK_FALSE(report.justified());
}

TEST_CASE("dropping a same-value attack is diagnosed") {
  const Vaf vaf = support::running_vaf();
  auto edges = support::load_graph_fixture("fig2a.json").edges();
  edges.erase(std::remove(edges.begin(), edges.end(),
                          Edge(ArgumentId("C"), ArgumentId("B"))),
              edges.end());
  const auto report =
      derive_constraints(vaf, AttackGraph(vaf.arguments(), edges));
  CHECK(report.status == JustificationStatus::same_value_attack_dropped);
  REQUIRE(report.offending_edge.has_value());
  CHECK(*report.offending_edge == Edge(ArgumentId("C"), ArgumentId("B")));
}

TEST_CASE("cyclic constraints carry the cycle, rotated to the least value") {
  const Vaf cycle4 = io::parse_vaf(support::load_fixture("cycle4.json"));
  const AttackGraph empty(cycle4.arguments(), {});
  const auto report = derive_constraints(cycle4, empty);
  REQUIRE(report.status == JustificationStatus::cyclic_constraints);
  CHECK(report.cycle == std::vector<ValueId>{ValueId("v1"), ValueId("v4"),
                                             ValueId("v3"), ValueId("v2")});
  CHECK(report.constraints.constraints.size() == 4);
  CHECK(enumerate_justifying_audiences(cycle4, empty).empty());
}

TEST_CASE("argument sets must match before any diagnosis") {
  const Vaf vaf = support::running_vaf();
  const AttackGraph other({ArgumentId("A")}, {});
  try {
    derive_constraints(vaf, other);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::argument_set_mismatch);
  }
}

TEST_CASE("the first expert's graph has exactly two justifying audiences") {
  const Vaf vaf = support::running_vaf();
  const auto audiences = enumerate_justifying_audiences(
      vaf, support::load_graph_fixture("fig2a.json"));
  REQUIRE(audiences.size() == 2);
  CHECK(audiences[0].order() ==
        std::vector<ValueId>{ValueId("EV"), ValueId("SF"), ValueId("IE"),
                             ValueId("ER")});
  CHECK(audiences[1].order() ==
        std::vector<ValueId>{ValueId("EV"), ValueId("IE"), ValueId("SF"),
                             ValueId("ER")});
}

TEST_CASE("lexicographically minimal extension under declared order") {
  const Vaf vaf = support::running_vaf();
  const auto report =
      derive_constraints(vaf, support::load_graph_fixture("fig2a.json"));
  const auto lexmin = lexmin_extension(report.constraints);
  REQUIRE(lexmin.has_value());
  CHECK(lexmin->order() ==
        std::vector<ValueId>{ValueId("EV"), ValueId("SF"), ValueId("IE"),
                             ValueId("ER")});

  const Vaf cycle4 = io::parse_vaf(support::load_fixture("cycle4.json"));
  const auto cyclic =
      derive_constraints(cycle4, AttackGraph(cycle4.arguments(), {}));
  CHECK_FALSE(lexmin_extension(cyclic.constraints).has_value());
}

TEST_CASE("linear extensions agree with the brute-force filter") {
  for (const auto& vaf : support::corpus(6)) {
    for (const auto& g : enumerate_defeat_graphs(vaf)) {
      const auto fast = enumerate_justifying_audiences(vaf, g);
      const auto slow = brute_justifying(vaf, g);
      REQUIRE(fast == slow);
      REQUIRE_FALSE(fast.empty());
      // The greedy extension is the first enumerated one.
      const auto lexmin =
          lexmin_extension(derive_constraints(vaf, g).constraints);
      REQUIRE(lexmin.has_value());
      CHECK(*lexmin == fast.front());
    }
  }
}

TEST_CASE("uniqueness of justification is a property of the value graph") {
  CHECK_FALSE(has_unique_justification_property(support::running_vaf()));

  const ArgumentId p("p"), q("q");
  const Vaf two({ValueId("x"), ValueId("y")},
                {{p, ValueId("x")}, {q, ValueId("y")}}, {{p, q}});
  CHECK(has_unique_justification_property(two));
}

TEST_CASE("profile membership requires every graph to be justified") {
  const Vaf vaf = support::running_vaf();
  const AttackGraph fig2a = support::load_graph_fixture("fig2a.json");
  CHECK(is_profile_justified_by(vaf, {fig2a, fig2a}));
  CHECK_FALSE(
      is_profile_justified_by(vaf, {fig2a, AttackGraph(vaf.arguments(), {})}));
  CHECK_THROWS_AS(is_profile_justified_by(vaf, {}), Error);
}

TEST_CASE("searching for a framework that justifies a profile") {
  const ArgumentId p("p"), q("q");
  const AttackGraph forward({p, q}, {{p, q}});
  const AttackGraph backward({p, q}, {{q, p}});
  const AttackGraph both({p, q}, {{p, q}, {q, p}});
  const std::vector<Edge> candidates{{p, q}, {q, p}};

  const auto found =
      find_justifying_vaf({forward, backward}, candidates, 4);
  REQUIRE(found.has_value());
  CHECK(found->values().size() == 2);
  CHECK(is_profile_justified_by(*found, {forward, backward}));

  // A graph containing a mutual attack next to a graph that drops one side
  // cannot be rationalised: same-value labels force both edges everywhere,
  // distinct labels forbid the mutual pair.
  CHECK_FALSE(find_justifying_vaf({both, forward}, candidates, 4).has_value());
}

TEST_CASE("framework search prefers fewer values and lexical labelings") {
  const auto members =
      io::parse_graph_members(support::load_fixture("experts_graph_profile.json"));
  std::vector<Edge> candidates;
  for (const auto& g : members)
    candidates.insert(candidates.end(), g.edges().begin(), g.edges().end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  const auto found = find_justifying_vaf(members, candidates, 4);
  REQUIRE(found.has_value());
  CHECK(found->values().size() == 3);
  CHECK(is_profile_justified_by(*found, members));
  // No 2-value labeling works.
  CHECK_FALSE(find_justifying_vaf(members, candidates, 2).has_value());
}
