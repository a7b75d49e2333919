#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vba/combined.hpp"
#include "vba/core.hpp"
#include "vba/enumerate.hpp"
#include "vba/error.hpp"
#include "vba/graphagg.hpp"
#include "vba/justification.hpp"
#include "vba/prefagg.hpp"

namespace vba {

/// Caps for the exhaustive searches. Every check estimates its elementary
/// step count up front and refuses to start above case_cap; a positive
/// time_budget aborts runs that still take too long.
struct SearchBounds {
  std::size_t max_values = 3;
  std::size_t max_agents = 2;
  std::size_t max_arguments = 4;
  std::chrono::milliseconds time_budget{0};  // 0 means unlimited
  std::uint64_t case_cap = 4'000'000;
};

enum class PrefAxiom { unanimity, anonymity, independence, non_dictatorship };

enum class GraphAxiom {
  unanimity,
  anonymity,
  independence,
  monotonicity,
  non_dictatorship,
};

constexpr std::string_view to_string(PrefAxiom a) {
  switch (a) {
    case PrefAxiom::unanimity: return "unanimity";
    case PrefAxiom::anonymity: return "anonymity";
    case PrefAxiom::independence: return "independence";
    case PrefAxiom::non_dictatorship: return "non-dictatorship";
  }
  return "unknown";
}

constexpr std::string_view to_string(GraphAxiom a) {
  switch (a) {
    case GraphAxiom::unanimity: return "unanimity";
    case GraphAxiom::anonymity: return "anonymity";
    case GraphAxiom::independence: return "independence";
    case GraphAxiom::monotonicity: return "monotonicity";
    case GraphAxiom::non_dictatorship: return "non-dictatorship";
  }
  return "unknown";
}

/// Everything needed to replay a violation through the public API. Only the
/// fields relevant to the particular check are set.
struct Witness {
  std::optional<PreferenceProfile> pref_profile;
  std::optional<PreferenceProfile> pref_profile_other;
  std::optional<std::pair<ValueId, ValueId>> value_pair;
  std::optional<Audience> audience_output;
  std::optional<Audience> audience_output_other;
  std::optional<GraphProfile> graph_profile;
  std::optional<GraphProfile> graph_profile_other;
  std::optional<Edge> edge;
  std::optional<AttackGraph> graph_output;
  std::optional<AttackGraph> graph_output_other;
  std::optional<std::vector<std::size_t>> permutation;
  std::optional<std::size_t> agent;
  std::optional<JustifiabilityReport> report;
  std::optional<Vaf> vaf;
  std::optional<Vaf> vaf_other;
};

struct Verdict {
  bool holds = true;
  std::uint64_t checked = 0;
  std::optional<Witness> witness;
};

namespace detail {

inline void validate_bounds(const SearchBounds& bounds) {
  if (bounds.max_values < 1 || bounds.max_agents < 1 ||
      bounds.max_arguments < 1)
    throw InvariantViolation("search bounds must all be at least 1");
  if (bounds.max_agents > 16)
    throw_error(ErrorCode::budget_exceeded,
                "more than 16 agents is outside any feasible search");
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : enabled_(budget.count() > 0),
        end_(std::chrono::steady_clock::now() + budget) {}

  void poll() {
    if (!enabled_ || ++ticks_ % 256 != 0) return;
    if (std::chrono::steady_clock::now() > end_)
      throw_error(ErrorCode::budget_exceeded,
                  "time budget exhausted before the search finished");
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

inline void require_within_cap(std::uint64_t estimate,
                               const SearchBounds& bounds,
                               const char* what) {
  if (estimate > bounds.case_cap)
    throw_error(ErrorCode::budget_exceeded,
                std::string(what) + " needs about " +
                    std::to_string(estimate) +
                    " steps, above the configured cap of " +
                    std::to_string(bounds.case_cap));
}

/// Value universe for a preference-rule check: a Borda tiebreak pins the
/// values and their canonical order; otherwise v1..v{max_values}.
inline std::vector<ValueId> pref_value_universe(const PrefRuleSpec& rule,
                                                const SearchBounds& bounds) {
  if (const auto* borda = std::get_if<BordaRule>(&rule.rule))
    if (borda->tiebreak) return borda->tiebreak->order();
  std::vector<ValueId> values;
  values.reserve(bounds.max_values);
  for (std::size_t i = 0; i < bounds.max_values; ++i)
    values.push_back(ValueId("v" + std::to_string(i + 1)));
  return values;
}

inline std::vector<ArgumentId> generated_arguments(std::size_t m) {
  std::vector<ArgumentId> args;
  args.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    args.push_back(ArgumentId("a" + std::to_string(i + 1)));
  return args;
}

/// Lexicographic odometer: advances the tuple, returns false on wraparound.
inline bool advance_tuple(std::vector<std::size_t>& t, std::size_t base) {
  std::size_t i = t.size();
  while (i > 0 && t[i - 1] + 1 == base) t[--i] = 0;
  if (i == 0) return false;
  ++t[i - 1];
  return true;
}

inline std::vector<std::size_t> tuple_from_rank(std::uint64_t rank,
                                                std::size_t base,
                                                std::size_t n) {
  std::vector<std::size_t> t(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    t[i] = static_cast<std::size_t>(rank % base);
    rank /= base;
  }
  return t;
}

/// Tracks, per (item, supporter-set) class, the first profile seen and the
/// first later profile whose output disagrees on the item; the global
/// minimum of those (first, conflicting, item) triples is exactly the
/// enumeration-order-minimal independence violation.
class IndependenceTracker {
 public:
  void observe(std::size_t item, std::uint64_t mask, std::uint64_t rank,
               bool out) {
    auto [it, fresh] = groups_.try_emplace({item, mask});
    Entry& g = it->second;
    if (fresh) {
      g.first = rank;
      g.first_out = out;
      return;
    }
    if (g.conflicted || g.first_out == out) return;
    g.conflicted = true;
    if (!best_ || std::tuple(g.first, rank, item) <
                      std::tuple(best_->first, best_->second, best_->item))
      best_ = Violation{g.first, rank, item};
  }

  struct Violation {
    std::uint64_t first;
    std::uint64_t second;
    std::size_t item;
  };

  const std::optional<Violation>& best() const { return best_; }

 private:
  struct Entry {
    std::uint64_t first = 0;
    bool first_out = false;
    bool conflicted = false;
  };
  std::map<std::pair<std::size_t, std::uint64_t>, Entry> groups_;
  std::optional<Violation> best_;
};

}  // namespace detail

/// Exhaustive verification of a preference-rule axiom over all profiles of
/// audiences on the rule's value universe, with profile lengths 1 through
/// max_agents (non-dictatorship is decided at length max_agents, where it
/// is most meaningful). Witnesses are minimal in enumeration order:
/// profiles ordered lexicographically by audience index, items by declared
/// value index pair.
inline Verdict check_pref_axiom(const PrefRuleSpec& rule, PrefAxiom axiom,
                                const SearchBounds& bounds) {
  detail::validate_bounds(bounds);
  const std::vector<ValueId> values =
      detail::pref_value_universe(rule, bounds);
  const std::size_t k = values.size();
  if (k > 8)
    throw_error(ErrorCode::budget_exceeded,
                "preference axiom search over more than 8 values");
  const PrefRuleSpec resolved = resolve_tiebreak(rule, values);
  const std::vector<Audience> audiences = all_audiences(values);
  const std::size_t A = audiences.size();
  std::map<ValueId, std::size_t> vidx;
  for (std::size_t i = 0; i < k; ++i) vidx.emplace(values[i], i);
  std::vector<std::vector<std::size_t>> pos(A,
                                            std::vector<std::size_t>(k, 0));
  for (std::size_t a = 0; a < A; ++a)
    for (std::size_t p = 0; p < k; ++p)
      pos[a][vidx.at(audiences[a].order()[p])] = p;
  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) items.emplace_back(i, j);

  auto profile_of = [&](const std::vector<std::size_t>& t) {
    std::vector<Audience> members;
    members.reserve(t.size());
    for (std::size_t i : t) members.push_back(audiences[i]);
    return PreferenceProfile(std::move(members));
  };
  auto output_positions = [&](const Audience& out) {
    std::vector<std::size_t> p(k, 0);
    for (std::size_t i = 0; i < k; ++i) p[vidx.at(out.order()[i])] = i;
    return p;
  };

  detail::Deadline deadline(bounds.time_budget);
  Verdict verdict;

  std::uint64_t estimate = 0;
  const std::size_t first_n =
      axiom == PrefAxiom::non_dictatorship ? bounds.max_agents : 1;
  for (std::size_t n = first_n; n <= bounds.max_agents; ++n) {
    std::uint64_t per = detail::sat_pow(A, n);
    per = detail::sat_mul(
        per, axiom == PrefAxiom::anonymity ? detail::factorial(n)
                                           : items.size() + 1);
    estimate += per;
  }
  detail::require_within_cap(estimate, bounds, "preference axiom check");

  for (std::size_t n = first_n; n <= bounds.max_agents; ++n) {
    if (A == 0) break;
    std::vector<std::size_t> t(n, 0);
    std::uint64_t rank = 0;
    detail::IndependenceTracker tracker;
    std::vector<bool> alive(n, axiom == PrefAxiom::non_dictatorship);
    std::size_t alive_count = axiom == PrefAxiom::non_dictatorship ? n : 0;
    const auto perms = axiom == PrefAxiom::anonymity
                           ? index_permutations(n)
                           : std::vector<std::vector<std::size_t>>{};
    do {
      deadline.poll();
      ++verdict.checked;
      const Audience out = aggregate_prefs(resolved, profile_of(t));
      const auto out_pos = output_positions(out);
      switch (axiom) {
        case PrefAxiom::unanimity:
          for (std::size_t idx = 0; idx < items.size(); ++idx) {
            const auto [u, w] = items[idx];
            bool all = true;
            for (std::size_t i : t)
              if (pos[i][u] >= pos[i][w]) {
                all = false;
                break;
              }
            if (all && out_pos[u] >= out_pos[w]) {
              Witness witness;
              witness.pref_profile = profile_of(t);
              witness.value_pair = std::pair(values[u], values[w]);
              witness.audience_output = out;
              return {false, verdict.checked, std::move(witness)};
            }
          }
          break;
        case PrefAxiom::anonymity:
          for (const auto& perm : perms) {
            std::vector<std::size_t> t2(n);
            for (std::size_t i = 0; i < n; ++i) t2[i] = t[perm[i]];
            if (t2 == t) continue;
            const Audience out2 = aggregate_prefs(resolved, profile_of(t2));
            if (!(out2 == out)) {
              Witness witness;
              witness.pref_profile = profile_of(t);
              witness.permutation = perm;
              witness.pref_profile_other = profile_of(t2);
              witness.audience_output = out;
              witness.audience_output_other = out2;
              return {false, verdict.checked, std::move(witness)};
            }
          }
          break;
        case PrefAxiom::independence:
          for (std::size_t idx = 0; idx < items.size(); ++idx) {
            const auto [u, w] = items[idx];
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < n; ++i)
              if (pos[t[i]][u] < pos[t[i]][w]) mask |= std::uint64_t{1} << i;
            tracker.observe(idx, mask, rank, out_pos[u] < out_pos[w]);
          }
          break;
        case PrefAxiom::non_dictatorship:
          for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && !(out == audiences[t[i]])) {
              alive[i] = false;
              --alive_count;
            }
          break;
      }
      if (axiom == PrefAxiom::non_dictatorship && alive_count == 0) break;
      ++rank;
    } while (detail::advance_tuple(t, A));

    if (axiom == PrefAxiom::independence && tracker.best()) {
      const auto& v = *tracker.best();
      const auto t1 = detail::tuple_from_rank(v.first, A, n);
      const auto t2 = detail::tuple_from_rank(v.second, A, n);
      Witness witness;
      witness.pref_profile = profile_of(t1);
      witness.pref_profile_other = profile_of(t2);
      witness.value_pair =
          std::pair(values[items[v.item].first], values[items[v.item].second]);
      witness.audience_output = aggregate_prefs(resolved, profile_of(t1));
      witness.audience_output_other =
          aggregate_prefs(resolved, profile_of(t2));
      return {false, verdict.checked, std::move(witness)};
    }
    if (axiom == PrefAxiom::non_dictatorship && alive_count > 0) {
      Witness witness;
      for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) {
          witness.agent = i;
          break;
        }
      return {false, verdict.checked, std::move(witness)};
    }
  }
  return verdict;
}

namespace detail {

struct GraphDomain {
  std::vector<ArgumentId> arguments;
  std::vector<AttackGraph> graphs;
  std::vector<Edge> items;
};

inline GraphDomain graph_domain(const SearchBounds& bounds,
                                const std::optional<Vaf>& justified_only) {
  GraphDomain d;
  if (justified_only) {
    if (justified_only->values().size() > 8)
      throw_error(ErrorCode::budget_exceeded,
                  "defeat graph enumeration over more than 8 values");
    d.arguments = justified_only->arguments();
    d.graphs = enumerate_defeat_graphs(*justified_only);
    d.items = justified_only->attacks();
    return d;
  }
  if (bounds.max_arguments > 4)
    throw_error(ErrorCode::budget_exceeded,
                "graph axiom search over more than 4 arguments");
  d.arguments = generated_arguments(bounds.max_arguments);
  d.graphs = all_graphs(d.arguments);
  d.items = edge_universe(d.arguments);
  return d;
}

}  // namespace detail

/// Exhaustive verification of a graph-rule axiom. Without justified_only
/// the domain is every directed graph over max_arguments generated
/// arguments; with it, every defeat graph of that framework. Profiles are
/// enumerated in canonical order: total edge count first, then
/// lexicographically by graph index.
inline Verdict check_graph_axiom(
    const GraphRuleSpec& rule, GraphAxiom axiom, const SearchBounds& bounds,
    const std::optional<Vaf>& justified_only = std::nullopt) {
  detail::validate_bounds(bounds);
  const detail::GraphDomain domain =
      detail::graph_domain(bounds, justified_only);
  const std::size_t G = domain.graphs.size();
  const std::size_t item_count = domain.items.size();
  std::vector<std::vector<bool>> member_has(G,
                                            std::vector<bool>(item_count));
  std::vector<std::size_t> weights(G);
  for (std::size_t g = 0; g < G; ++g) {
    weights[g] = domain.graphs[g].edge_count();
    for (std::size_t e = 0; e < item_count; ++e)
      member_has[g][e] = domain.graphs[g].has_edge(domain.items[e].first,
                                                   domain.items[e].second);
  }

  const std::size_t first_n =
      axiom == GraphAxiom::non_dictatorship ? bounds.max_agents : 1;
  std::uint64_t estimate = 0;
  for (std::size_t n = first_n; n <= bounds.max_agents; ++n) {
    std::uint64_t per = detail::sat_pow(G, n);
    std::uint64_t inner = item_count + 1;
    if (axiom == GraphAxiom::anonymity) inner = detail::factorial(n);
    if (axiom == GraphAxiom::monotonicity)
      inner = detail::sat_mul(n, item_count + 1);
    estimate += detail::sat_mul(per, inner);
  }
  detail::require_within_cap(estimate, bounds, "graph axiom check");

  auto profile_of = [&](const std::vector<std::size_t>& t) {
    std::vector<AttackGraph> members;
    members.reserve(t.size());
    for (std::size_t i : t) members.push_back(domain.graphs[i]);
    return GraphProfile(std::move(members));
  };
  auto apply = [&](const std::vector<std::size_t>& t) {
    return aggregate_graphs(rule, profile_of(t));
  };

  detail::Deadline deadline(bounds.time_budget);
  Verdict verdict;

  for (std::size_t n = first_n; n <= bounds.max_agents; ++n) {
    if (G == 0) break;
    const auto tuples = weighted_tuples(weights, n);
    detail::IndependenceTracker tracker;
    std::vector<bool> alive(n, axiom == GraphAxiom::non_dictatorship);
    std::size_t alive_count = axiom == GraphAxiom::non_dictatorship ? n : 0;
    const auto perms = axiom == GraphAxiom::anonymity
                           ? index_permutations(n)
                           : std::vector<std::vector<std::size_t>>{};
    for (std::uint64_t rank = 0; rank < tuples.size(); ++rank) {
      deadline.poll();
      ++verdict.checked;
      const auto& t = tuples[rank];
      const AttackGraph out = apply(t);
      switch (axiom) {
        case GraphAxiom::unanimity:
          for (std::size_t e = 0; e < item_count; ++e) {
            bool all = true;
            for (std::size_t i : t)
              if (!member_has[i][e]) {
                all = false;
                break;
              }
            if (all &&
                !out.has_edge(domain.items[e].first, domain.items[e].second)) {
              Witness witness;
              witness.graph_profile = profile_of(t);
              witness.edge = domain.items[e];
              witness.graph_output = out;
              return {false, verdict.checked, std::move(witness)};
            }
          }
          break;
        case GraphAxiom::anonymity:
          for (const auto& perm : perms) {
            std::vector<std::size_t> t2(n);
            for (std::size_t i = 0; i < n; ++i) t2[i] = t[perm[i]];
            if (t2 == t) continue;
            const AttackGraph out2 = apply(t2);
            if (!(out2 == out)) {
              Witness witness;
              witness.graph_profile = profile_of(t);
              witness.permutation = perm;
              witness.graph_profile_other = profile_of(t2);
              witness.graph_output = out;
              witness.graph_output_other = out2;
              return {false, verdict.checked, std::move(witness)};
            }
          }
          break;
        case GraphAxiom::independence:
          for (std::size_t e = 0; e < item_count; ++e) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < n; ++i)
              if (member_has[t[i]][e]) mask |= std::uint64_t{1} << i;
            tracker.observe(
                e, mask, rank,
                out.has_edge(domain.items[e].first, domain.items[e].second));
          }
          break;
        case GraphAxiom::monotonicity:
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t e = 0; e < item_count; ++e) {
              if (member_has[t[i]][e]) continue;
              if (!out.has_edge(domain.items[e].first,
                                domain.items[e].second))
                continue;
              std::vector<Edge> enlarged = domain.graphs[t[i]].edges();
              enlarged.push_back(domain.items[e]);
              AttackGraph changed(domain.arguments, std::move(enlarged));
              if (justified_only && !is_defeat_graph(*justified_only, changed))
                continue;  // stays inside the domain or is skipped
              std::vector<AttackGraph> members;
              for (std::size_t j = 0; j < n; ++j)
                members.push_back(j == i ? changed : domain.graphs[t[j]]);
              GraphProfile modified(std::move(members));
              const AttackGraph out2 = aggregate_graphs(rule, modified);
              if (!out2.has_edge(domain.items[e].first,
                                 domain.items[e].second)) {
                Witness witness;
                witness.graph_profile = profile_of(t);
                witness.agent = i;
                witness.edge = domain.items[e];
                witness.graph_profile_other = modified;
                witness.graph_output = out;
                witness.graph_output_other = out2;
                return {false, verdict.checked, std::move(witness)};
              }
            }
          }
          break;
        case GraphAxiom::non_dictatorship:
          for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && !(out == domain.graphs[t[i]])) {
              alive[i] = false;
              --alive_count;
            }
          break;
      }
      if (axiom == GraphAxiom::non_dictatorship && alive_count == 0) break;
    }
    if (axiom == GraphAxiom::independence && tracker.best()) {
      const auto& v = *tracker.best();
      const auto& t1 = tuples[v.first];
      const auto& t2 = tuples[v.second];
      Witness witness;
      witness.graph_profile = profile_of(t1);
      witness.graph_profile_other = profile_of(t2);
      witness.edge = domain.items[v.item];
      witness.graph_output = apply(t1);
      witness.graph_output_other = apply(t2);
      return {false, verdict.checked, std::move(witness)};
    }
    if (axiom == GraphAxiom::non_dictatorship && alive_count > 0) {
      Witness witness;
      for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) {
          witness.agent = i;
          break;
        }
      return {false, verdict.checked, std::move(witness)};
    }
  }
  return verdict;
}

/// Enumerates every length-n profile of defeat graphs of vaf and fails on
/// the first whose aggregate is not itself a defeat graph. The witness
/// carries the profile, the aggregate, and the constraint diagnosis.
inline Verdict check_preservation(const GraphRuleSpec& rule, const Vaf& vaf,
                                  std::size_t n,
                                  const SearchBounds& bounds = {}) {
  detail::validate_bounds(bounds);
  if (n < 1) throw InvariantViolation("profile length must be at least 1");
  if (vaf.values().size() > 8)
    throw_error(ErrorCode::budget_exceeded,
                "defeat graph enumeration over more than 8 values");
  const auto graphs = enumerate_defeat_graphs(vaf);
  detail::require_within_cap(detail::sat_pow(graphs.size(), n), bounds,
                             "preservation check");
  std::vector<std::size_t> weights(graphs.size());
  for (std::size_t g = 0; g < graphs.size(); ++g)
    weights[g] = graphs[g].edge_count();
  detail::Deadline deadline(bounds.time_budget);
  Verdict verdict;
  for (const auto& t : weighted_tuples(weights, n)) {
    deadline.poll();
    ++verdict.checked;
    std::vector<AttackGraph> members;
    members.reserve(n);
    for (std::size_t i : t) members.push_back(graphs[i]);
    GraphProfile profile(std::move(members));
    const AttackGraph aggregate = aggregate_graphs(rule, profile);
    JustifiabilityReport report = derive_constraints(vaf, aggregate);
    if (!report.justified()) {
      Witness witness;
      witness.graph_profile = std::move(profile);
      witness.graph_output = aggregate;
      witness.report = std::move(report);
      return {false, verdict.checked, std::move(witness)};
    }
  }
  return verdict;
}

/// For every length-n profile of defeat graphs of vaf and every pair of
/// justifying preference profiles, the rule must induce the same collective
/// defeat graph. Justifying profiles are enumerated as tuples over each
/// graph's canonical audience list.
inline Verdict check_interpretation_independence(
    const PrefRuleSpec& rule, const Vaf& vaf, std::size_t n,
    const SearchBounds& bounds = {}) {
  detail::validate_bounds(bounds);
  if (n < 1) throw InvariantViolation("profile length must be at least 1");
  if (vaf.values().size() > 8)
    throw_error(ErrorCode::budget_exceeded,
                "defeat graph enumeration over more than 8 values");
  const PrefRuleSpec resolved = resolve_tiebreak(rule, vaf.values());
  const auto graphs = enumerate_defeat_graphs(vaf);
  std::vector<std::vector<Audience>> justifications(graphs.size());
  std::vector<std::size_t> weights(graphs.size());
  std::uint64_t max_just = 1;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    justifications[g] = enumerate_justifying_audiences(vaf, graphs[g]);
    weights[g] = graphs[g].edge_count();
    max_just = std::max<std::uint64_t>(max_just, justifications[g].size());
  }
  detail::require_within_cap(
      detail::sat_mul(detail::sat_pow(graphs.size(), n),
                      detail::sat_pow(max_just, n)),
      bounds, "interpretation independence check");
  detail::Deadline deadline(bounds.time_budget);
  Verdict verdict;
  for (const auto& t : weighted_tuples(weights, n)) {
    deadline.poll();
    std::vector<std::size_t> bases(n);
    for (std::size_t i = 0; i < n; ++i) bases[i] = justifications[t[i]].size();
    auto audiences_of = [&](const std::vector<std::size_t>& choice) {
      std::vector<Audience> members;
      members.reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        members.push_back(justifications[t[i]][choice[i]]);
      return PreferenceProfile(std::move(members));
    };
    auto induced = [&](const PreferenceProfile& prefs) {
      return induce_defeat_graph(vaf, aggregate_prefs(resolved, prefs));
    };
    // Mixed-radix scan over the justification choices; the first output is
    // the reference, the first deviation is the minimal violating pair.
    std::vector<std::size_t> choice(n, 0);
    std::optional<PreferenceProfile> reference_prefs;
    std::optional<AttackGraph> reference_out;
    while (true) {
      ++verdict.checked;
      PreferenceProfile prefs = audiences_of(choice);
      AttackGraph out = induced(prefs);
      if (!reference_out) {
        reference_prefs = std::move(prefs);
        reference_out = std::move(out);
      } else if (!(out == *reference_out)) {
        Witness witness;
        std::vector<AttackGraph> members;
        for (std::size_t i : t) members.push_back(graphs[i]);
        witness.graph_profile = GraphProfile(std::move(members));
        witness.pref_profile = *reference_prefs;
        witness.pref_profile_other = std::move(prefs);
        witness.graph_output = *reference_out;
        witness.graph_output_other = std::move(out);
        return {false, verdict.checked, std::move(witness)};
      }
      std::size_t i = n;
      while (i > 0 && choice[i - 1] + 1 == bases[i - 1]) choice[--i] = 0;
      if (i == 0) break;
      ++choice[i - 1];
    }
  }
  return verdict;
}

/// Probes the proof-shaped family: four arguments, a mutual attack between
/// the first two, and every bijective labeling with four values. Fails when
/// two frameworks that justify the same profile give the mechanism
/// different outputs.
inline Verdict check_vaf_independence(const PrefRuleSpec& rule,
                                      const JustificationSelector& selector,
                                      const SearchBounds& bounds) {
  detail::validate_bounds(bounds);
  if (bounds.max_values < 4 || bounds.max_arguments < 4)
    throw_error(ErrorCode::budget_exceeded,
                "framework independence search needs bounds admitting 4 "
                "values over 4 arguments");
  const auto args = detail::generated_arguments(4);
  std::vector<ValueId> values;
  for (std::size_t i = 0; i < 4; ++i)
    values.push_back(ValueId("v" + std::to_string(i + 1)));
  const std::vector<Edge> attacks{{args[0], args[1]}, {args[1], args[0]}};
  std::vector<Vaf> vafs;
  for (const auto& perm : index_permutations(4)) {
    std::vector<std::pair<ArgumentId, ValueId>> labeled;
    for (std::size_t i = 0; i < 4; ++i)
      labeled.emplace_back(args[i], values[perm[i]]);
    vafs.push_back(Vaf(values, std::move(labeled), attacks));
  }
  std::uint64_t estimate = 0;
  for (std::size_t n = 1; n <= bounds.max_agents; ++n)
    estimate += detail::sat_mul(detail::sat_mul(vafs.size(), vafs.size()),
                                detail::sat_pow(2, n));
  detail::require_within_cap(estimate, bounds,
                             "framework independence check");
  detail::Deadline deadline(bounds.time_budget);
  Verdict verdict;
  for (std::size_t x = 0; x < vafs.size(); ++x) {
    for (std::size_t y = x + 1; y < vafs.size(); ++y) {
      std::vector<AttackGraph> common;
      for (const auto& g : enumerate_defeat_graphs(vafs[x]))
        if (is_defeat_graph(vafs[y], g)) common.push_back(g);
      sort_graphs_canonically(common, vafs[x].attacks());
      if (common.empty()) continue;
      std::vector<std::size_t> weights(common.size());
      for (std::size_t g = 0; g < common.size(); ++g)
        weights[g] = common[g].edge_count();
      for (std::size_t n = 1; n <= bounds.max_agents; ++n) {
        for (const auto& t : weighted_tuples(weights, n)) {
          deadline.poll();
          ++verdict.checked;
          std::vector<AttackGraph> members;
          members.reserve(n);
          for (std::size_t i : t) members.push_back(common[i]);
          GraphProfile profile(std::move(members));
          const AttackGraph out1 =
              combined_mechanism(rule, selector, vafs[x], profile);
          const AttackGraph out2 =
              combined_mechanism(rule, selector, vafs[y], profile);
          if (!(out1 == out2)) {
            Witness witness;
            witness.vaf = vafs[x];
            witness.vaf_other = vafs[y];
            witness.graph_profile = std::move(profile);
            witness.graph_output = out1;
            witness.graph_output_other = out2;
            return {false, verdict.checked, std::move(witness)};
          }
        }
      }
    }
  }
  return verdict;
}

/// Checks a graph-level axiom for the graph aggregation rule induced by the
/// combined mechanism with the lexicographic-minimal selector, over all
/// length-n profiles of defeat graphs of vaf.
inline Verdict check_inheritance(const PrefRuleSpec& rule, const Vaf& vaf,
                                 GraphAxiom axiom, std::size_t n,
                                 const SearchBounds& bounds = {}) {
  detail::validate_bounds(bounds);
  if (axiom != GraphAxiom::unanimity && axiom != GraphAxiom::anonymity &&
      axiom != GraphAxiom::independence)
    throw InvariantViolation(
        "inheritance covers unanimity, anonymity, and independence");
  if (n < 1) throw InvariantViolation("profile length must be at least 1");
  if (vaf.values().size() > 8)
    throw_error(ErrorCode::budget_exceeded,
                "defeat graph enumeration over more than 8 values");
  const PrefRuleSpec resolved = resolve_tiebreak(rule, vaf.values());
  const auto graphs = enumerate_defeat_graphs(vaf);
  const std::vector<Edge>& items = vaf.attacks();
  std::vector<Audience> selected;
  std::vector<std::size_t> weights(graphs.size());
  std::vector<std::vector<bool>> member_has(
      graphs.size(), std::vector<bool>(items.size()));
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    selected.push_back(
        *lexmin_extension(derive_constraints(vaf, graphs[g]).constraints));
    weights[g] = graphs[g].edge_count();
    for (std::size_t e = 0; e < items.size(); ++e)
      member_has[g][e] =
          graphs[g].has_edge(items[e].first, items[e].second);
  }
  std::uint64_t inner = items.size() + 1;
  if (axiom == GraphAxiom::anonymity) inner = detail::factorial(n);
  detail::require_within_cap(
      detail::sat_mul(detail::sat_pow(graphs.size(), n), inner), bounds,
      "inheritance check");

  auto profile_of = [&](const std::vector<std::size_t>& t) {
    std::vector<AttackGraph> members;
    members.reserve(t.size());
    for (std::size_t i : t) members.push_back(graphs[i]);
    return GraphProfile(std::move(members));
  };
  auto apply = [&](const std::vector<std::size_t>& t) {
    std::vector<Audience> prefs;
    prefs.reserve(t.size());
    for (std::size_t i : t) prefs.push_back(selected[i]);
    return induce_defeat_graph(
        vaf, aggregate_prefs(resolved, PreferenceProfile(std::move(prefs))));
  };

  detail::Deadline deadline(bounds.time_budget);
  Verdict verdict;
  const auto tuples = weighted_tuples(weights, n);
  detail::IndependenceTracker tracker;
  const auto perms = axiom == GraphAxiom::anonymity
                         ? index_permutations(n)
                         : std::vector<std::vector<std::size_t>>{};
  for (std::uint64_t rank = 0; rank < tuples.size(); ++rank) {
    deadline.poll();
    ++verdict.checked;
    const auto& t = tuples[rank];
    const AttackGraph out = apply(t);
    if (axiom == GraphAxiom::unanimity) {
      for (std::size_t e = 0; e < items.size(); ++e) {
        bool all = true;
        for (std::size_t i : t)
          if (!member_has[i][e]) {
            all = false;
            break;
          }
        if (all && !out.has_edge(items[e].first, items[e].second)) {
          Witness witness;
          witness.graph_profile = profile_of(t);
          witness.edge = items[e];
          witness.graph_output = out;
          return {false, verdict.checked, std::move(witness)};
        }
      }
    } else if (axiom == GraphAxiom::anonymity) {
      for (const auto& perm : perms) {
        std::vector<std::size_t> t2(n);
        for (std::size_t i = 0; i < n; ++i) t2[i] = t[perm[i]];
        if (t2 == t) continue;
        const AttackGraph out2 = apply(t2);
        if (!(out2 == out)) {
          Witness witness;
          witness.graph_profile = profile_of(t);
          witness.permutation = perm;
          witness.graph_profile_other = profile_of(t2);
          witness.graph_output = out;
          witness.graph_output_other = out2;
          return {false, verdict.checked, std::move(witness)};
        }
      }
    } else {
      for (std::size_t e = 0; e < items.size(); ++e) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (member_has[t[i]][e]) mask |= std::uint64_t{1} << i;
        tracker.observe(e, mask, rank,
                        out.has_edge(items[e].first, items[e].second));
      }
    }
  }
  if (axiom == GraphAxiom::independence && tracker.best()) {
    const auto& v = *tracker.best();
    Witness witness;
    witness.graph_profile = profile_of(tuples[v.first]);
    witness.graph_profile_other = profile_of(tuples[v.second]);
    witness.edge = items[v.item];
    witness.graph_output = apply(tuples[v.first]);
    witness.graph_output_other = apply(tuples[v.second]);
    return {false, verdict.checked, std::move(witness)};
  }
  return verdict;
}

}  // namespace vba
