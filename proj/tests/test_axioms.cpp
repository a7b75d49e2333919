#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "vba/vba.hpp"

using namespace vba;

namespace {

SearchBounds pref_bounds() {
  return io::parse_bounds(support::load_fixture("bounds_pref.json"));
}

SearchBounds graph_bounds() {
  return io::parse_bounds(support::load_fixture("bounds_graph.json"));
}

const PrefRuleSpec borda{BordaRule{}};
const PrefRuleSpec dictator0{DictatorRule{0}};

}  // namespace

TEST_CASE("rank-sum aggregation satisfies unanimity and anonymity") {
  CHECK(check_pref_axiom(borda, PrefAxiom::unanimity, pref_bounds()).holds);
  CHECK(check_pref_axiom(borda, PrefAxiom::anonymity, pref_bounds()).holds);
}

TEST_CASE("rank-sum aggregation is not independent") {
  const Verdict v =
      check_pref_axiom(borda, PrefAxiom::independence, pref_bounds());
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  const Witness& w = *v.witness;
  REQUIRE(w.pref_profile.has_value());
  REQUIRE(w.pref_profile_other.has_value());
  REQUIRE(w.value_pair.has_value());
  const auto [u, vv] = *w.value_pair;

  // The witness is self-certifying: same pairwise pattern, flipped output.
  const PrefRuleSpec resolved =
      resolve_tiebreak(borda, w.pref_profile->value_set());
  const Audience out1 = aggregate_prefs(resolved, *w.pref_profile);
  const Audience out2 = aggregate_prefs(resolved, *w.pref_profile_other);
  CHECK(out1 == *w.audience_output);
  CHECK(out2 == *w.audience_output_other);
  CHECK(support_count_pref(*w.pref_profile, u, vv) ==
        support_count_pref(*w.pref_profile_other, u, vv));
  CHECK(out1.prefers(u, vv) != out2.prefers(u, vv));

  // The enumeration-order-minimal witness is stable across runs.
  const Verdict again =
      check_pref_axiom(borda, PrefAxiom::independence, pref_bounds());
  CHECK(*again.witness->pref_profile == *w.pref_profile);
  CHECK(*again.witness->pref_profile_other == *w.pref_profile_other);
  CHECK(*again.witness->value_pair == *w.value_pair);
}

TEST_CASE("the dictator rule is independent but dictatorial") {
  CHECK(check_pref_axiom(dictator0, PrefAxiom::unanimity, pref_bounds())
            .holds);
  CHECK(check_pref_axiom(dictator0, PrefAxiom::independence, pref_bounds())
            .holds);
  const Verdict v = check_pref_axiom(dictator0, PrefAxiom::non_dictatorship,
                                     pref_bounds());
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->agent == 0);

  CHECK(check_pref_axiom(borda, PrefAxiom::non_dictatorship, pref_bounds())
            .holds);
}

TEST_CASE("quota rules behave on two-argument universes") {
  for (const GraphRuleSpec& rule :
       {GraphRuleSpec{MajorityRule{}},
        GraphRuleSpec{QuotaRule{Rational(2, 3)}}}) {
    CHECK(check_graph_axiom(rule, GraphAxiom::anonymity, graph_bounds())
              .holds);
    CHECK(check_graph_axiom(rule, GraphAxiom::independence, graph_bounds())
              .holds);
    CHECK(check_graph_axiom(rule, GraphAxiom::monotonicity, graph_bounds())
              .holds);
    CHECK(check_graph_axiom(rule, GraphAxiom::non_dictatorship,
                            graph_bounds())
              .holds);
  }
}

TEST_CASE("the graph dictator fails non-dictatorship with agent zero") {
  const Verdict v =
      check_graph_axiom(GraphRuleSpec{GraphDictatorRule{0}},
                        GraphAxiom::non_dictatorship, graph_bounds());
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->agent == 0);
}

TEST_CASE("quota rules reproduce constant profiles") {
  CHECK(check_graph_axiom(GraphRuleSpec{QuotaRule{Rational(1, 1)}},
                          GraphAxiom::unanimity, graph_bounds())
            .holds);
}

TEST_CASE("preservation fails for majority on the four-cycle") {
  const Vaf cycle4 = io::parse_vaf(support::load_fixture("cycle4.json"));
  const Verdict v =
      check_preservation(GraphRuleSpec{MajorityRule{}}, cycle4, 4);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  const Witness& w = *v.witness;
  REQUIRE(w.graph_profile.has_value());
  REQUIRE(w.graph_output.has_value());
  REQUIRE(w.report.has_value());

  // The minimal witness is the profile of the four single-edge graphs.
  REQUIRE(w.graph_profile->size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK((*w.graph_profile)[i].edge_count() == 1);
    CHECK((*w.graph_profile)[i].has_edge(cycle4.attacks()[i].first,
                                         cycle4.attacks()[i].second));
  }
  CHECK(w.graph_output->edge_count() == 0);
  CHECK(w.report->status == JustificationStatus::cyclic_constraints);
  CHECK(w.report->cycle.size() == 4);

  // Replays through the public aggregation call.
  CHECK(aggregate_graphs(GraphRuleSpec{MajorityRule{}}, *w.graph_profile) ==
        *w.graph_output);
}

TEST_CASE("preservation holds for the dictator-like quota on the running "
          "framework at n=2") {
  const Vaf vaf = support::running_vaf();
  CHECK(check_preservation(GraphRuleSpec{GraphDictatorRule{0}}, vaf, 2)
            .holds);
}

TEST_CASE("interpretation independence separates dictator from rank-sum") {
  const Vaf vaf = support::running_vaf();
  const Verdict ok = check_interpretation_independence(dictator0, vaf, 2);
  CHECK(ok.holds);
  CHECK(ok.checked == 576);

  const Vaf proof = io::parse_vaf(support::load_fixture("proof_vaf.json"));
  const Verdict bad = check_interpretation_independence(borda, proof, 2);
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  const Witness& w = *bad.witness;

  // Both preference profiles justify the same graph profile, yet the
  // mechanism's outputs differ.
  const PrefRuleSpec resolved = resolve_tiebreak(borda, proof.values());
  REQUIRE(w.graph_profile->size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(induce_defeat_graph(proof, (*w.pref_profile)[i]) ==
          (*w.graph_profile)[i]);
    CHECK(induce_defeat_graph(proof, (*w.pref_profile_other)[i]) ==
          (*w.graph_profile)[i]);
  }
  const AttackGraph out1 = induce_defeat_graph(
      proof, aggregate_prefs(resolved, *w.pref_profile));
  const AttackGraph out2 = induce_defeat_graph(
      proof, aggregate_prefs(resolved, *w.pref_profile_other));
  CHECK(out1 == *w.graph_output);
  CHECK(out2 == *w.graph_output_other);
  CHECK_FALSE(out1 == out2);
}

TEST_CASE("framework independence separates dictator from rank-sum") {
  const SearchBounds bounds =
      io::parse_bounds(support::load_fixture("bounds_vafindep.json"));
  CHECK(check_vaf_independence(dictator0, {LexMinSelector{}}, bounds).holds);

  const Verdict bad =
      check_vaf_independence(borda, {LexMinSelector{}}, bounds);
  REQUIRE_FALSE(bad.holds);
  const Witness& w = *bad.witness;
  REQUIRE(w.vaf.has_value());
  REQUIRE(w.vaf_other.has_value());
  // Same profile, two frameworks that both justify it, different outputs.
  CHECK(is_profile_justified_by(*w.vaf, w.graph_profile->graphs()));
  CHECK(is_profile_justified_by(*w.vaf_other, w.graph_profile->graphs()));
  const AttackGraph out1 = combined_mechanism(borda, {LexMinSelector{}},
                                              *w.vaf, *w.graph_profile);
  const AttackGraph out2 = combined_mechanism(borda, {LexMinSelector{}},
                                              *w.vaf_other, *w.graph_profile);
  CHECK(out1 == *w.graph_output);
  CHECK(out2 == *w.graph_output_other);
  CHECK_FALSE(out1 == out2);

  // The search needs room for the probe family.
  CHECK_THROWS_AS(check_vaf_independence(borda, {LexMinSelector{}},
                                         pref_bounds()),
                  Error);
}

TEST_CASE("the induced graph rule inherits preference-level axioms") {
  const Vaf vaf = support::running_vaf();
  CHECK(check_inheritance(borda, vaf, GraphAxiom::unanimity, 2).holds);
  CHECK(check_inheritance(borda, vaf, GraphAxiom::anonymity, 2).holds);
  CHECK(check_inheritance(dictator0, vaf, GraphAxiom::independence, 2)
            .holds);
  CHECK_THROWS_AS(
      check_inheritance(borda, vaf, GraphAxiom::monotonicity, 2),
      InvariantViolation);
}

TEST_CASE("search bounds are validated and enforced") {
  SearchBounds zero;
  zero.max_values = 0;
  CHECK_THROWS_AS(check_pref_axiom(borda, PrefAxiom::unanimity, zero),
                  InvariantViolation);

  SearchBounds tiny = pref_bounds();
  tiny.case_cap = 10;
  try {
    check_pref_axiom(borda, PrefAxiom::independence, tiny);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}
