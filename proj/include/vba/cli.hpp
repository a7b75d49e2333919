#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "vba/axioms.hpp"
#include "vba/combined.hpp"
#include "vba/core.hpp"
#include "vba/dot.hpp"
#include "vba/error.hpp"
#include "vba/graphagg.hpp"
#include "vba/json_io.hpp"
#include "vba/justification.hpp"
#include "vba/prefagg.hpp"

namespace vba::cli {

namespace detail {

using io::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline json load_doc(const std::string& path) {
  try {
    return io::parse_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::size_t parse_size(const std::string& text, const char* what) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " is out of range");
  }
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

/// A --rule argument names exactly one rule, either preference-level or
/// graph-level; commands reject the kind they cannot use.
struct RuleDoc {
  std::optional<PrefRuleSpec> pref;
  std::optional<GraphRuleSpec> graph;
};

inline RuleDoc rule_from_json(const json& j) {
  const std::string name = io::rule_name(j);
  if (io::is_pref_rule_name(name)) return {io::parse_pref_rule(j), {}};
  if (io::is_graph_rule_name(name)) return {{}, io::parse_graph_rule(j)};
  throw ParseError("unknown rule '" + name + "'");
}

/// Accepts inline forms (borda, borda:V1,V2, dictator:K, quota:Q, majority,
/// representative, graph-dictator:K) or a path to a rule document.
inline RuleDoc parse_rule_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head =
      colon == std::string::npos ? spec : spec.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  if (head == "borda") {
    BordaRule borda;
    if (!tail.empty()) {
      std::vector<ValueId> order;
      for (const auto& part : split(tail, ','))
        order.push_back(ValueId(part));
      borda.tiebreak = Audience(std::move(order));
    }
    return {PrefRuleSpec{borda}, {}};
  }
  if (head == "dictator")
    return {PrefRuleSpec{DictatorRule{
                tail.empty() ? 0 : parse_size(tail, "dictator index")}},
            {}};
  if (head == "quota") {
    if (tail.empty()) throw ParseError("quota needs a threshold, e.g. quota:1/2");
    Rational q = parse_rational(tail);
    if (q.num > q.den) throw ParseError("quota must lie in [0, 1]");
    return {{}, GraphRuleSpec{QuotaRule{q}}};
  }
  if (head == "majority" && tail.empty())
    return {{}, GraphRuleSpec{MajorityRule{}}};
  if (head == "representative" && tail.empty())
    return {{}, GraphRuleSpec{RepresentativeVoterRule{}}};
  if (head == "graph-dictator")
    return {{}, GraphRuleSpec{GraphDictatorRule{
                    tail.empty() ? 0 : parse_size(tail, "dictator index")}}};
  return rule_from_json(load_doc(spec));
}

inline PrefRuleSpec require_pref_rule(const RuleDoc& rule, const char* command) {
  if (!rule.pref)
    throw ParseError(std::string(command) +
                     " needs a preference rule (borda or dictator)");
  return *rule.pref;
}

inline GraphRuleSpec require_graph_rule(const RuleDoc& rule,
                                        const char* command) {
  if (!rule.graph)
    throw ParseError(std::string(command) +
                     " needs a graph rule (quota, majority, representative, "
                     "or graph-dictator)");
  return *rule.graph;
}

inline std::vector<AttackGraph> load_graph_members(const std::string& path) {
  const json doc = load_doc(path);
  const std::string kind = io::detect_kind(doc);
  if (kind == "graph") return {io::parse_graph(doc)};
  if (kind == "graph_profile") return io::parse_graph_members(doc);
  throw ParseError(path + ": expected a graph or graph profile document");
}

inline GraphProfile load_graph_profile(const std::string& path) {
  return GraphProfile(load_graph_members(path));
}

inline PreferenceProfile load_pref_profile(const std::string& path) {
  const json doc = load_doc(path);
  const std::string kind = io::detect_kind(doc);
  if (kind == "audience")
    return PreferenceProfile({io::parse_audience(doc)});
  if (kind == "audience_profile") return io::parse_preference_profile(doc);
  throw ParseError(path + ": expected an audience or audience profile document");
}

inline Vaf load_vaf(const std::string& path) {
  return io::parse_vaf(load_doc(path));
}

inline JustificationSelector parse_selector(const std::string& spec) {
  if (spec == "lexmin") return {LexMinSelector{}};
  if (spec.rfind("explicit:", 0) == 0) {
    const std::string path = spec.substr(9);
    return {ExplicitSelector{io::parse_audience_members(load_doc(path))}};
  }
  throw ParseError("unknown selector '" + spec +
                   "'; expected lexmin or explicit:FILE");
}

inline std::vector<Edge> union_of_edges(const GraphProfile& profile) {
  std::vector<Edge> edges;
  for (const auto& g : profile.graphs())
    edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

struct Options {
  std::string vaf_path;
  std::string profile_path;
  std::string audience_path;
  std::string rule_spec;
  std::string selector = "lexmin";
  std::string vaf_selector = "provided";
  std::string axiom;
  std::string bounds_path;
  std::string out_path;
  long long n = -1;
  bool dot = false;
  bool show_blocked = false;
};

inline void write_text(const Options& opt, const std::string& text,
                       std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write file '" + opt.out_path + "'");
  file << text;
}

inline void emit_json(const Options& opt, const json& doc, std::ostream& out) {
  write_text(opt, doc.dump(2) + "\n", out);
}

inline void emit_graph(const Options& opt, const AttackGraph& graph,
                       const Vaf* context, std::ostream& out) {
  if (opt.dot)
    write_text(opt, to_dot(graph, context, opt.show_blocked), out);
  else
    emit_json(opt, io::to_json(graph), out);
}

inline Vaf resolve_framework(const Options& opt, const GraphProfile& profile) {
  if (opt.vaf_selector == "provided") {
    if (opt.vaf_path.empty())
      throw ParseError("--vaf is required with the provided framework selector");
    return load_vaf(opt.vaf_path);
  }
  if (opt.vaf_selector == "brute" ||
      opt.vaf_selector.rfind("brute:", 0) == 0) {
    std::size_t max_values =
        opt.vaf_selector == "brute"
            ? 4
            : parse_size(opt.vaf_selector.substr(6), "brute value bound");
    return resolve_vaf(
        VafSelector{BruteForceVaf{union_of_edges(profile), max_values}},
        profile);
  }
  throw ParseError("unknown framework selector '" + opt.vaf_selector +
                   "'; expected provided or brute:MAXV");
}

// ---- command handlers ------------------------------------------------------

inline void run_induce(const Options& opt, std::ostream& out) {
  const Vaf vaf = load_vaf(opt.vaf_path);
  const Audience audience = io::parse_audience(load_doc(opt.audience_path));
  emit_graph(opt, induce_defeat_graph(vaf, audience), &vaf, out);
}

inline void run_check(const Options& opt, std::ostream& out) {
  const Vaf vaf = load_vaf(opt.vaf_path);
  const auto graphs = load_graph_members(opt.profile_path);
  bool all = true;
  json members = json::array();
  for (const auto& g : graphs) {
    const JustifiabilityReport report = derive_constraints(vaf, g);
    all = all && report.justified();
    members.push_back(io::to_json(report));
  }
  emit_json(opt, json{{"justified", all}, {"members", std::move(members)}},
            out);
}

inline void run_justify(const Options& opt, std::ostream& out) {
  const Vaf vaf = load_vaf(opt.vaf_path);
  const auto graphs = load_graph_members(opt.profile_path);
  const std::size_t max_values =
      opt.bounds_path.empty()
          ? 8
          : io::parse_bounds(load_doc(opt.bounds_path)).max_values;
  json members = json::array();
  for (const auto& g : graphs) {
    const auto audiences = enumerate_justifying_audiences(vaf, g, max_values);
    json list = json::array();
    for (const auto& a : audiences) list.push_back(io::to_json(a));
    members.push_back(
        json{{"justified", !audiences.empty()}, {"audiences", std::move(list)}});
  }
  emit_json(opt, json{{"members", std::move(members)}}, out);
}

inline void run_agg_prefs(const Options& opt, std::ostream& out) {
  PrefRuleSpec rule =
      require_pref_rule(parse_rule_spec(opt.rule_spec), "agg-prefs");
  const PreferenceProfile profile = load_pref_profile(opt.profile_path);
  // An unset Borda tiebreak defaults to the framework's declared order when
  // one is given, otherwise to the profile's value set sorted by name.
  rule = resolve_tiebreak(rule, opt.vaf_path.empty()
                                    ? profile.value_set()
                                    : load_vaf(opt.vaf_path).values());
  const Audience result = aggregate_prefs(rule, profile);
  json doc = io::to_json(result);
  if (std::holds_alternative<BordaRule>(rule.rule)) {
    json scores = json::object();
    for (const auto& [value, score] : borda_scores(profile))
      scores[value.name()] = score;
    doc["scores"] = std::move(scores);
  }
  emit_json(opt, doc, out);
}

inline void run_agg_graphs(const Options& opt, std::ostream& out) {
  const GraphRuleSpec rule =
      require_graph_rule(parse_rule_spec(opt.rule_spec), "agg-graphs");
  const GraphProfile profile = load_graph_profile(opt.profile_path);
  const AttackGraph result = aggregate_graphs(rule, profile);
  std::optional<Vaf> context;
  if (!opt.vaf_path.empty()) context = load_vaf(opt.vaf_path);
  emit_graph(opt, result, context ? &*context : nullptr, out);
}

inline void run_combined(const Options& opt, std::ostream& out) {
  const PrefRuleSpec rule =
      require_pref_rule(parse_rule_spec(opt.rule_spec), "combined");
  const GraphProfile profile = load_graph_profile(opt.profile_path);
  const JustificationSelector selector = parse_selector(opt.selector);
  const Vaf vaf = resolve_framework(opt, profile);
  emit_graph(opt, combined_mechanism(rule, selector, vaf, profile), &vaf, out);
}

inline void run_rationalise(const Options& opt, std::ostream& out) {
  const GraphProfile profile = load_graph_profile(opt.profile_path);
  std::optional<SearchBounds> bounds;
  if (!opt.bounds_path.empty())
    bounds = io::parse_bounds(load_doc(opt.bounds_path));
  std::size_t max_values = bounds ? bounds->max_values : 4;
  if (opt.vaf_selector.rfind("brute:", 0) == 0)
    max_values = parse_size(opt.vaf_selector.substr(6), "brute value bound");
  else if (opt.vaf_selector != "provided" && opt.vaf_selector != "brute")
    throw ParseError("unknown framework selector '" + opt.vaf_selector +
                     "'; expected provided or brute:MAXV");
  const auto found = find_justifying_vaf(
      profile.graphs(), union_of_edges(profile), max_values,
      bounds ? bounds->max_arguments : 8,
      bounds ? bounds->max_values : max_values);
  if (found)
    emit_json(opt, json{{"found", true}, {"vaf", io::to_json(*found)}}, out);
  else
    emit_json(opt, json{{"found", false}}, out);
}

inline PrefAxiom pref_axiom_from_name(const std::string& name) {
  if (name == "unanimity") return PrefAxiom::unanimity;
  if (name == "anonymity") return PrefAxiom::anonymity;
  if (name == "independence") return PrefAxiom::independence;
  if (name == "non-dictatorship") return PrefAxiom::non_dictatorship;
  throw ParseError("unknown axiom '" + name + "'");
}

inline GraphAxiom graph_axiom_from_name(const std::string& name) {
  if (name == "unanimity") return GraphAxiom::unanimity;
  if (name == "anonymity") return GraphAxiom::anonymity;
  if (name == "independence") return GraphAxiom::independence;
  if (name == "non-dictatorship") return GraphAxiom::non_dictatorship;
  if (name == "monotonicity") return GraphAxiom::monotonicity;
  throw ParseError("unknown axiom '" + name + "'");
}

inline std::size_t require_n(const Options& opt) {
  if (opt.n < 1)
    throw ParseError("axiom '" + opt.axiom +
                     "' needs a profile length, e.g. --n 2");
  return static_cast<std::size_t>(opt.n);
}

inline void run_axiom_check(const Options& opt, std::ostream& out) {
  const RuleDoc rule = parse_rule_spec(opt.rule_spec);
  SearchBounds bounds;
  if (!opt.bounds_path.empty())
    bounds = io::parse_bounds(load_doc(opt.bounds_path));
  std::optional<Vaf> vaf;
  if (!opt.vaf_path.empty()) vaf = load_vaf(opt.vaf_path);
  const auto require_vaf = [&]() -> const Vaf& {
    if (!vaf)
      throw ParseError("axiom '" + opt.axiom + "' needs --vaf");
    return *vaf;
  };

  Verdict verdict;
  if (opt.axiom == "preservation") {
    verdict = check_preservation(require_graph_rule(rule, "preservation"),
                                 require_vaf(), require_n(opt), bounds);
  } else if (opt.axiom == "interpretation-independence") {
    verdict = check_interpretation_independence(
        require_pref_rule(rule, "interpretation-independence"), require_vaf(),
        require_n(opt), bounds);
  } else if (opt.axiom == "vaf-independence") {
    verdict = check_vaf_independence(
        require_pref_rule(rule, "vaf-independence"),
        parse_selector(opt.selector), bounds);
  } else if (opt.axiom.rfind("inheritance:", 0) == 0) {
    verdict = check_inheritance(
        require_pref_rule(rule, "inheritance"), require_vaf(),
        graph_axiom_from_name(opt.axiom.substr(12)), require_n(opt), bounds);
  } else if (rule.pref) {
    if (opt.n >= 1) bounds.max_agents = static_cast<std::size_t>(opt.n);
    verdict = check_pref_axiom(*rule.pref, pref_axiom_from_name(opt.axiom),
                               bounds);
  } else {
    if (opt.n >= 1) bounds.max_agents = static_cast<std::size_t>(opt.n);
    verdict = check_graph_axiom(*rule.graph,
                                graph_axiom_from_name(opt.axiom), bounds, vaf);
  }

  json doc{{"axiom", opt.axiom},
           {"rule", rule.pref ? io::to_json(*rule.pref)
                              : io::to_json(*rule.graph)}};
  if (opt.n >= 1) doc["n"] = opt.n;
  doc.update(io::to_json(verdict));
  emit_json(opt, doc, out);
}

inline void emit_error(std::ostream& err, const std::string& code,
                       const std::string& message) {
  err << json{{"error", {{"code", code}, {"message", message}}}}.dump(2)
      << "\n";
}

}  // namespace detail

/// Dispatches one command line (without the program name). Success output
/// goes to `out`, error documents to `err`. Returns the process exit code:
/// 0 on success, 1 on domain errors, 2 on parse or usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  detail::Options opt;
  CLI::App app{"value-based argumentation aggregation toolkit", "vba"};
  app.require_subcommand(1);

  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "write the output document here");
  };
  const auto add_dot = [&](CLI::App* sub) {
    sub->add_flag("--dot", opt.dot, "emit Graphviz DOT instead of JSON");
    sub->add_flag("--show-blocked", opt.show_blocked,
                  "draw non-surviving attacks dashed (DOT only)");
  };

  CLI::App* induce =
      app.add_subcommand("induce", "induce the defeat graph of a framework "
                                   "under an audience");
  induce->add_option("--vaf", opt.vaf_path, "framework document")->required();
  induce->add_option("--audience", opt.audience_path, "audience document")
      ->required();
  add_dot(induce);
  add_out(induce);

  CLI::App* check = app.add_subcommand(
      "check", "diagnose whether graphs are defeat graphs of a framework");
  check->add_option("--vaf", opt.vaf_path, "framework document")->required();
  check->add_option("--profile", opt.profile_path,
                    "graph or graph profile document")
      ->required();
  add_out(check);

  CLI::App* justify = app.add_subcommand(
      "justify", "enumerate the audiences that induce each graph");
  justify->add_option("--vaf", opt.vaf_path, "framework document")->required();
  justify->add_option("--profile", opt.profile_path,
                      "graph or graph profile document")
      ->required();
  justify->add_option("--bounds", opt.bounds_path, "search bounds document");
  add_out(justify);

  CLI::App* agg_prefs = app.add_subcommand(
      "agg-prefs", "aggregate an audience profile with a preference rule");
  agg_prefs->add_option("--rule", opt.rule_spec, "preference rule")->required();
  agg_prefs->add_option("--profile", opt.profile_path,
                        "audience profile document")
      ->required();
  agg_prefs->add_option("--vaf", opt.vaf_path,
                        "framework whose declared order breaks ties");
  add_out(agg_prefs);

  CLI::App* agg_graphs = app.add_subcommand(
      "agg-graphs", "aggregate a graph profile with a graph rule");
  agg_graphs->add_option("--rule", opt.rule_spec, "graph rule")->required();
  agg_graphs->add_option("--profile", opt.profile_path,
                         "graph profile document")
      ->required();
  agg_graphs->add_option("--vaf", opt.vaf_path,
                         "framework used as DOT context");
  add_dot(agg_graphs);
  add_out(agg_graphs);

  CLI::App* combined = app.add_subcommand(
      "combined", "select justifying audiences, aggregate, and induce");
  combined->add_option("--rule", opt.rule_spec, "preference rule")->required();
  combined->add_option("--profile", opt.profile_path,
                       "graph profile document")
      ->required();
  combined->add_option("--vaf", opt.vaf_path, "framework document");
  combined->add_option("--selector", opt.selector,
                       "justification selector: lexmin or explicit:FILE");
  combined->add_option("--vaf-selector", opt.vaf_selector,
                       "framework selector: provided or brute:MAXV");
  add_dot(combined);
  add_out(combined);

  CLI::App* rationalise = app.add_subcommand(
      "rationalise", "search for a framework whose defeat graphs cover a "
                     "graph profile");
  rationalise->add_option("--profile", opt.profile_path,
                          "graph profile document")
      ->required();
  rationalise->add_option("--bounds", opt.bounds_path,
                          "search bounds document");
  rationalise->add_option("--vaf-selector", opt.vaf_selector,
                          "brute:MAXV caps the number of distinct values");
  add_out(rationalise);

  CLI::App* axiom_check = app.add_subcommand(
      "axiom-check", "test a rule against an axiom on a bounded domain");
  axiom_check->add_option("--rule", opt.rule_spec, "rule under test")
      ->required();
  axiom_check
      ->add_option("--axiom", opt.axiom,
                   "unanimity | anonymity | independence | non-dictatorship "
                   "| monotonicity | preservation | "
                   "interpretation-independence | vaf-independence | "
                   "inheritance:AXIOM")
      ->required();
  axiom_check->add_option("--vaf", opt.vaf_path, "framework document");
  axiom_check->add_option("--n", opt.n, "profile length for fixed-n checks");
  axiom_check->add_option("--bounds", opt.bounds_path,
                          "search bounds document");
  axiom_check->add_option("--selector", opt.selector,
                          "justification selector for vaf-independence");
  add_out(axiom_check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::emit_error(err, "parse-error", e.what());
    return 2;
  }

  try {
    if (app.got_subcommand(induce)) detail::run_induce(opt, out);
    else if (app.got_subcommand(check)) detail::run_check(opt, out);
    else if (app.got_subcommand(justify)) detail::run_justify(opt, out);
    else if (app.got_subcommand(agg_prefs)) detail::run_agg_prefs(opt, out);
    else if (app.got_subcommand(agg_graphs)) detail::run_agg_graphs(opt, out);
    else if (app.got_subcommand(combined)) detail::run_combined(opt, out);
    else if (app.got_subcommand(rationalise)) detail::run_rationalise(opt, out);
    else detail::run_axiom_check(opt, out);
    return 0;
  } catch (const ParseError& e) {
    detail::emit_error(err, std::string(to_string(e.code())), e.what());
    return 2;
  } catch (const Error& e) {
    detail::emit_error(err, std::string(to_string(e.code())), e.what());
    return 1;
  }
}

}  // namespace vba::cli
