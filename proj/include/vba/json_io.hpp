#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vba/axioms.hpp"
#include "vba/combined.hpp"
#include "vba/core.hpp"
#include "vba/error.hpp"
#include "vba/graphagg.hpp"
#include "vba/justification.hpp"
#include "vba/prefagg.hpp"

namespace vba::io {

using json = nlohmann::ordered_json;

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

namespace detail {

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing required field '") + key + "'");
  return j.at(key);
}

inline std::string as_string(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline const json& as_array(const json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array");
  return j;
}

inline std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

inline Edge parse_edge(const json& j, const char* what) {
  as_array(j, what);
  if (j.size() != 2)
    throw ParseError(std::string(what) + " must be a pair of names");
  return Edge(ArgumentId(as_string(j[0], what)),
              ArgumentId(as_string(j[1], what)));
}

inline json edge_to_json(const Edge& e) {
  return json::array({e.first.name(), e.second.name()});
}

}  // namespace detail

// ---- audiences -----------------------------------------------------------

inline json to_json(const Audience& audience) {
  json order = json::array();
  for (const auto& v : audience.order()) order.push_back(v.name());
  return json{{"order", std::move(order)}};
}

inline Audience parse_audience(const json& j) {
  std::vector<ValueId> order;
  for (const auto& v : detail::as_array(detail::member(j, "order"), "order"))
    order.push_back(ValueId(detail::as_string(v, "audience value")));
  return Audience(std::move(order));
}

// ---- attack graphs -------------------------------------------------------

inline json to_json(const AttackGraph& g) {
  json arguments = json::array();
  std::map<ArgumentId, std::size_t> index;
  for (const auto& a : g.arguments()) {
    index.emplace(a, arguments.size());
    arguments.push_back(a.name());
  }
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(index.at(x.first), index.at(x.second)) <
           std::pair(index.at(y.first), index.at(y.second));
  });
  json edge_list = json::array();
  for (const auto& e : edges) edge_list.push_back(detail::edge_to_json(e));
  return json{{"arguments", std::move(arguments)},
              {"edges", std::move(edge_list)}};
}

inline AttackGraph parse_graph(const json& j) {
  std::vector<ArgumentId> arguments;
  for (const auto& a :
       detail::as_array(detail::member(j, "arguments"), "arguments"))
    arguments.push_back(ArgumentId(detail::as_string(a, "argument name")));
  std::vector<Edge> edges;
  for (const auto& e : detail::as_array(detail::member(j, "edges"), "edges"))
    edges.push_back(detail::parse_edge(e, "edge"));
  return AttackGraph(std::move(arguments), std::move(edges));
}

// ---- frameworks ----------------------------------------------------------

inline json to_json(const Vaf& vaf) {
  json values = json::array();
  for (const auto& v : vaf.values()) values.push_back(v.name());
  json arguments = json::array();
  for (const auto& a : vaf.arguments())
    arguments.push_back(
        json{{"id", a.name()}, {"value", vaf.value_of(a).name()}});
  json attacks = json::array();
  for (const auto& e : vaf.attacks())
    attacks.push_back(detail::edge_to_json(e));
  return json{{"values", std::move(values)},
              {"arguments", std::move(arguments)},
              {"attacks", std::move(attacks)}};
}

inline Vaf parse_vaf(const json& j) {
  std::vector<ValueId> values;
  for (const auto& v : detail::as_array(detail::member(j, "values"), "values"))
    values.push_back(ValueId(detail::as_string(v, "value name")));
  std::vector<std::pair<ArgumentId, ValueId>> arguments;
  for (const auto& a :
       detail::as_array(detail::member(j, "arguments"), "arguments")) {
    arguments.emplace_back(
        ArgumentId(detail::as_string(detail::member(a, "id"), "argument id")),
        ValueId(detail::as_string(detail::member(a, "value"),
                                  "argument value")));
  }
  std::vector<Edge> attacks;
  for (const auto& e :
       detail::as_array(detail::member(j, "attacks"), "attacks"))
    attacks.push_back(detail::parse_edge(e, "attack"));
  return Vaf(std::move(values), std::move(arguments), std::move(attacks));
}

// ---- profiles ------------------------------------------------------------

inline json to_json(const PreferenceProfile& profile) {
  json members = json::array();
  for (const auto& a : profile.audiences()) members.push_back(to_json(a));
  return json{{"members", std::move(members)}};
}

inline json to_json(const GraphProfile& profile) {
  json members = json::array();
  for (const auto& g : profile.graphs()) members.push_back(to_json(g));
  return json{{"members", std::move(members)}};
}

inline std::vector<Audience> parse_audience_members(const json& j) {
  std::vector<Audience> members;
  for (const auto& m :
       detail::as_array(detail::member(j, "members"), "members"))
    members.push_back(parse_audience(m));
  return members;
}

inline std::vector<AttackGraph> parse_graph_members(const json& j) {
  std::vector<AttackGraph> members;
  for (const auto& m :
       detail::as_array(detail::member(j, "members"), "members"))
    members.push_back(parse_graph(m));
  return members;
}

inline PreferenceProfile parse_preference_profile(const json& j) {
  return PreferenceProfile(parse_audience_members(j));
}

inline GraphProfile parse_graph_profile(const json& j) {
  return GraphProfile(parse_graph_members(j));
}

// ---- rules ---------------------------------------------------------------

inline json to_json(const PrefRuleSpec& spec) {
  if (const auto* dictator = std::get_if<DictatorRule>(&spec.rule))
    return json{{"rule", "dictator"}, {"index", dictator->index}};
  const auto& borda = std::get<BordaRule>(spec.rule);
  json doc{{"rule", "borda"}};
  if (borda.tiebreak) {
    json tiebreak = json::array();
    for (const auto& v : borda.tiebreak->order())
      tiebreak.push_back(v.name());
    doc["tiebreak"] = std::move(tiebreak);
  }
  return doc;
}

inline json to_json(const GraphRuleSpec& spec) {
  if (const auto* quota = std::get_if<QuotaRule>(&spec.rule))
    return json{{"rule", "quota"},
                {"q", std::to_string(quota->q.num) + "/" +
                          std::to_string(quota->q.den)}};
  if (std::holds_alternative<MajorityRule>(spec.rule))
    return json{{"rule", "majority"}};
  if (std::holds_alternative<RepresentativeVoterRule>(spec.rule))
    return json{{"rule", "representative"}};
  const auto& dictator = std::get<GraphDictatorRule>(spec.rule);
  return json{{"rule", "graph-dictator"}, {"index", dictator.index}};
}

inline std::string rule_name(const json& j) {
  return detail::as_string(detail::member(j, "rule"), "rule name");
}

inline bool is_pref_rule_name(const std::string& name) {
  return name == "borda" || name == "dictator";
}

inline bool is_graph_rule_name(const std::string& name) {
  return name == "quota" || name == "majority" || name == "representative" ||
         name == "graph-dictator";
}

inline PrefRuleSpec parse_pref_rule(const json& j) {
  const std::string name = rule_name(j);
  if (name == "borda") {
    BordaRule borda;
    if (j.contains("tiebreak")) {
      std::vector<ValueId> order;
      for (const auto& v :
           detail::as_array(j.at("tiebreak"), "tiebreak"))
        order.push_back(ValueId(detail::as_string(v, "tiebreak value")));
      borda.tiebreak = Audience(std::move(order));
    }
    return PrefRuleSpec{borda};
  }
  if (name == "dictator")
    return PrefRuleSpec{
        DictatorRule{detail::as_index(detail::member(j, "index"), "index")}};
  throw ParseError("unknown preference rule '" + name + "'");
}

inline GraphRuleSpec parse_graph_rule(const json& j) {
  const std::string name = rule_name(j);
  if (name == "quota") {
    const json& q = detail::member(j, "q");
    Rational value;
    if (q.is_string())
      value = parse_rational(q.get<std::string>());
    else if (q.is_number_integer() && q.get<long long>() >= 0)
      value = Rational(q.get<long long>(), 1);
    else
      throw ParseError("quota q must be a rational string like \"1/2\"");
    if (value.num > value.den) throw ParseError("quota must lie in [0, 1]");
    return GraphRuleSpec{QuotaRule{value}};
  }
  if (name == "majority") return GraphRuleSpec{MajorityRule{}};
  if (name == "representative")
    return GraphRuleSpec{RepresentativeVoterRule{}};
  if (name == "graph-dictator")
    return GraphRuleSpec{GraphDictatorRule{
        detail::as_index(detail::member(j, "index"), "index")}};
  throw ParseError("unknown graph rule '" + name + "'");
}

// ---- search bounds -------------------------------------------------------

inline json to_json(const SearchBounds& bounds) {
  return json{{"max_values", bounds.max_values},
              {"max_agents", bounds.max_agents},
              {"max_arguments", bounds.max_arguments},
              {"time_budget_ms", bounds.time_budget.count()},
              {"case_cap", bounds.case_cap}};
}

inline SearchBounds parse_bounds(const json& j) {
  SearchBounds bounds;
  if (j.contains("max_values"))
    bounds.max_values = detail::as_index(j.at("max_values"), "max_values");
  if (j.contains("max_agents"))
    bounds.max_agents = detail::as_index(j.at("max_agents"), "max_agents");
  if (j.contains("max_arguments"))
    bounds.max_arguments =
        detail::as_index(j.at("max_arguments"), "max_arguments");
  if (j.contains("time_budget_ms"))
    bounds.time_budget = std::chrono::milliseconds(
        detail::as_index(j.at("time_budget_ms"), "time_budget_ms"));
  if (j.contains("case_cap"))
    bounds.case_cap = detail::as_index(j.at("case_cap"), "case_cap");
  return bounds;
}

// ---- reports and verdicts ------------------------------------------------

inline json to_json(const JustifiabilityReport& report) {
  json doc{{"status", std::string(to_string(report.status))}};
  switch (report.status) {
    case JustificationStatus::justified:
    case JustificationStatus::cyclic_constraints: {
      json constraints = json::array();
      for (const auto& [u, w] : report.constraints.constraints)
        constraints.push_back(json::array({u.name(), w.name()}));
      doc["constraints"] = std::move(constraints);
      if (report.status == JustificationStatus::cyclic_constraints) {
        json cycle = json::array();
        for (const auto& v : report.cycle) cycle.push_back(v.name());
        doc["cycle"] = std::move(cycle);
      }
      break;
    }
    case JustificationStatus::not_subgraph:
    case JustificationStatus::same_value_attack_dropped:
      doc["edge"] = detail::edge_to_json(*report.offending_edge);
      break;
  }
  return doc;
}

inline json to_json(const Witness& witness) {
  json doc = json::object();
  if (witness.vaf) doc["vaf"] = to_json(*witness.vaf);
  if (witness.vaf_other) doc["other-vaf"] = to_json(*witness.vaf_other);
  if (witness.pref_profile)
    doc["preference-profile"] = to_json(*witness.pref_profile);
  if (witness.pref_profile_other)
    doc["other-preference-profile"] = to_json(*witness.pref_profile_other);
  if (witness.graph_profile)
    doc["graph-profile"] = to_json(*witness.graph_profile);
  if (witness.graph_profile_other)
    doc["other-graph-profile"] = to_json(*witness.graph_profile_other);
  if (witness.permutation) {
    json perm = json::array();
    for (std::size_t i : *witness.permutation) perm.push_back(i);
    doc["permutation"] = std::move(perm);
  }
  if (witness.agent) doc["agent"] = *witness.agent;
  if (witness.value_pair)
    doc["value-pair"] = json::array(
        {witness.value_pair->first.name(), witness.value_pair->second.name()});
  if (witness.edge) doc["edge"] = detail::edge_to_json(*witness.edge);
  if (witness.audience_output)
    doc["audience-output"] = to_json(*witness.audience_output);
  if (witness.audience_output_other)
    doc["other-audience-output"] = to_json(*witness.audience_output_other);
  if (witness.graph_output)
    doc["graph-output"] = to_json(*witness.graph_output);
  if (witness.graph_output_other)
    doc["other-graph-output"] = to_json(*witness.graph_output_other);
  if (witness.report) doc["report"] = to_json(*witness.report);
  return doc;
}

inline json to_json(const Verdict& verdict) {
  json doc{{"status", verdict.holds ? "holds" : "fails"},
           {"checked", verdict.checked}};
  if (verdict.witness) doc["witness"] = to_json(*verdict.witness);
  return doc;
}

// ---- document kind sniffing ------------------------------------------------

inline std::string detect_kind(const json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.contains("values") && j.contains("arguments") &&
      j.contains("attacks"))
    return "vaf";
  if (j.contains("arguments") && j.contains("edges")) return "graph";
  if (j.contains("order")) return "audience";
  if (j.contains("members")) {
    const json& members = j.at("members");
    if (members.is_array() && !members.empty() && members[0].is_object() &&
        members[0].contains("order"))
      return "audience_profile";
    return "graph_profile";
  }
  if (j.contains("rule")) return "rule";
  if (j.contains("max_values") || j.contains("max_agents") ||
      j.contains("max_arguments") || j.contains("time_budget_ms") ||
      j.contains("case_cap"))
    return "bounds";
  throw ParseError("unrecognized document shape");
}

}  // namespace vba::io
