#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vba/core.hpp"
#include "vba/error.hpp"
#include "vba/justification.hpp"

namespace vba {

/// Exact non-negative rational, kept normalized. Avoids floating-point
/// quota thresholds.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den <= 0 || num < 0)
      throw InvariantViolation("rational must be non-negative with a "
                               "positive denominator");
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Accepts "a/b", decimal strings like "0.5", and plain integers.
inline Rational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return c >= '0' && c <= '9';
    });
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!digits(a) || !digits(b))
      throw ParseError("malformed rational '" + text + "'");
    return Rational(std::stoll(a), std::stoll(b));
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits(whole) || !digits(frac) || frac.size() > 9)
      throw ParseError("malformed rational '" + text + "'");
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(std::stoll(whole) * den + std::stoll(frac), den);
  }
  if (!digits(text)) throw ParseError("malformed rational '" + text + "'");
  return Rational(std::stoll(text), 1);
}

/// Inclusion threshold for n agents: ceil(q*n), never below 1, so q = 0
/// means the union of the submitted edges and q = 1 their intersection.
inline std::size_t quota_threshold(const Rational& q, std::size_t n) {
  long long t = (q.num * static_cast<long long>(n) + q.den - 1) / q.den;
  return static_cast<std::size_t>(std::max<long long>(t, 1));
}

/// Non-empty sequence of attack graphs over a common argument set.
class GraphProfile {
 public:
  explicit GraphProfile(std::vector<AttackGraph> graphs)
      : graphs_(std::move(graphs)) {
    if (graphs_.empty())
      throw_error(ErrorCode::empty_profile, "profile has no members");
    for (const auto& g : graphs_)
      if (!g.same_argument_set(graphs_.front()))
        throw_error(ErrorCode::argument_set_mismatch,
                    "profile members range over different argument sets");
  }

  const std::vector<AttackGraph>& graphs() const noexcept { return graphs_; }
  std::size_t size() const noexcept { return graphs_.size(); }
  const AttackGraph& operator[](std::size_t i) const { return graphs_[i]; }

  /// The common argument set, in the first member's declared order.
  const std::vector<ArgumentId>& arguments() const {
    return graphs_.front().arguments();
  }

  friend bool operator==(const GraphProfile&, const GraphProfile&) = default;

 private:
  std::vector<AttackGraph> graphs_;
};

struct QuotaRule {
  Rational q;
};

/// Alias for Quota{1/2}.
struct MajorityRule {};

struct GraphDictatorRule {
  std::size_t index = 0;
};

/// Returns the input graph minimizing the total symmetric-difference
/// distance to the profile; ties go to the lowest agent index.
struct RepresentativeVoterRule {};

struct GraphRuleSpec {
  std::variant<QuotaRule, MajorityRule, GraphDictatorRule,
               RepresentativeVoterRule>
      rule;
};

/// Indices of the agents whose graph contains the edge (a, b).
inline std::vector<std::size_t> support_count_graph(
    const GraphProfile& profile, const ArgumentId& a, const ArgumentId& b) {
  const auto& args = profile.arguments();
  for (const auto* x : {&a, &b})
    if (std::find(args.begin(), args.end(), *x) == args.end())
      throw_error(ErrorCode::unknown_argument,
                  "argument '" + x->name() + "' is not part of the profile");
  std::vector<std::size_t> supporters;
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (profile[i].has_edge(a, b)) supporters.push_back(i);
  return supporters;
}

inline AttackGraph aggregate_graphs(const GraphRuleSpec& spec,
                                    const GraphProfile& profile) {
  if (const auto* dictator = std::get_if<GraphDictatorRule>(&spec.rule)) {
    if (dictator->index >= profile.size())
      throw_error(ErrorCode::rule_profile_mismatch,
                  "dictator index " + std::to_string(dictator->index) +
                      " out of range for a profile of " +
                      std::to_string(profile.size()));
    return profile[dictator->index];
  }
  if (std::holds_alternative<RepresentativeVoterRule>(spec.rule)) {
    std::size_t best = 0;
    std::size_t best_distance = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
      std::size_t distance = 0;
      for (std::size_t j = 0; j < profile.size(); ++j) {
        std::vector<Edge> common;
        std::set_intersection(profile[i].edges().begin(),
                              profile[i].edges().end(),
                              profile[j].edges().begin(),
                              profile[j].edges().end(),
                              std::back_inserter(common));
        distance += profile[i].edge_count() + profile[j].edge_count() -
                    2 * common.size();
      }
      if (i == 0 || distance < best_distance) {
        best = i;
        best_distance = distance;
      }
    }
    return profile[best];
  }
  Rational q(1, 2);
  if (const auto* quota = std::get_if<QuotaRule>(&spec.rule)) {
    if (quota->q.num > quota->q.den)
      throw InvariantViolation("quota must lie in [0, 1]");
    q = quota->q;
  }
  const std::size_t threshold = quota_threshold(q, profile.size());
  std::set<Edge> candidates;
  for (const auto& g : profile.graphs())
    candidates.insert(g.edges().begin(), g.edges().end());
  std::vector<Edge> kept;
  for (const auto& e : candidates) {
    std::size_t support = 0;
    for (const auto& g : profile.graphs())
      if (g.has_edge(e.first, e.second)) ++support;
    if (support >= threshold) kept.push_back(e);
  }
  return AttackGraph(profile.arguments(), std::move(kept));
}

/// Single-instance preservation check: aggregate a profile of defeat graphs
/// and report whether the outcome is still a defeat graph of vaf.
inline JustifiabilityReport preserves_defeat_graph_on(
    const GraphRuleSpec& spec, const Vaf& vaf, const GraphProfile& profile) {
  if (!is_profile_justified_by(vaf, profile.graphs()))
    throw_error(ErrorCode::unjustified_input,
                "profile contains a graph that is not a defeat graph of the "
                "framework");
  return derive_constraints(vaf, aggregate_graphs(spec, profile));
}

}  // namespace vba
