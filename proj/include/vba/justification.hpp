#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vba/core.hpp"
#include "vba/enumerate.hpp"
#include "vba/error.hpp"

namespace vba {

/// Strict-order requirements over values: a pair (u, w) means u must be
/// ranked strictly above w. Pairs are deduplicated and sorted by declared
/// value index.
struct ConstraintSet {
  std::vector<ValueId> values;
  std::vector<std::pair<ValueId, ValueId>> constraints;
};

enum class JustificationStatus {
  justified,
  not_subgraph,
  same_value_attack_dropped,
  cyclic_constraints,
};

constexpr std::string_view to_string(JustificationStatus s) {
  switch (s) {
    case JustificationStatus::justified: return "justified";
    case JustificationStatus::not_subgraph: return "not-subgraph";
    case JustificationStatus::same_value_attack_dropped:
      return "same-value-attack-dropped";
    case JustificationStatus::cyclic_constraints: return "cyclic-constraints";
  }
  return "unknown";
}

/// Outcome of matching a graph against a framework. Exactly one status;
/// each failure variant carries its witness. The constraint set is filled
/// for both justified and cyclic outcomes.
struct JustifiabilityReport {
  JustificationStatus status = JustificationStatus::justified;
  ConstraintSet constraints;
  std::optional<Edge> offending_edge;  // not_subgraph, same_value_...
  std::vector<ValueId> cycle;          // cyclic_constraints: closed implicitly

  bool justified() const { return status == JustificationStatus::justified; }
};

namespace detail {

inline void require_same_argument_set(const Vaf& vaf, const AttackGraph& af) {
  std::vector<ArgumentId> v = vaf.arguments();
  std::sort(v.begin(), v.end());
  if (v != af.sorted_arguments())
    throw_error(ErrorCode::argument_set_mismatch,
                "graph does not range over the framework's arguments");
}

/// First directed cycle found by index-ordered depth-first search, as the
/// value sequence around the cycle, rotated to start at its smallest index.
inline std::vector<std::size_t> find_constraint_cycle(
    std::size_t k, const std::set<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::vector<std::size_t>> succ(k);
  for (const auto& [u, w] : arcs) succ[u].push_back(w);
  std::vector<int> color(k, 0);  // 0 fresh, 1 on path, 2 done
  std::vector<std::size_t> path;
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    color[u] = 1;
    path.push_back(u);
    for (std::size_t w : succ[u]) {
      if (color[w] == 1) {
        auto start = std::find(path.begin(), path.end(), w);
        cycle.assign(start, path.end());
        return true;
      }
      if (color[w] == 0 && visit(w)) return true;
    }
    path.pop_back();
    color[u] = 2;
    return false;
  };
  for (std::size_t u = 0; u < k; ++u)
    if (color[u] == 0 && visit(u)) break;
  if (!cycle.empty()) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
  }
  return cycle;
}

}  // namespace detail

/// Reads off the order constraints a graph imposes when matched against the
/// framework: a present distinct-value attack (a, b) requires val(a) above
/// val(b); an absent one requires val(b) above val(a). Same-value attacks
/// can never be blocked, so the graph must contain all of them and may not
/// contain anything outside the attack relation.
inline JustifiabilityReport derive_constraints(const Vaf& vaf,
                                               const AttackGraph& af) {
  detail::require_same_argument_set(vaf, af);
  JustifiabilityReport report;
  for (const auto& [a, b] : af.edges()) {
    if (!vaf.has_attack(a, b)) {
      report.status = JustificationStatus::not_subgraph;
      report.offending_edge = Edge(a, b);
      return report;
    }
  }
  for (const auto& [a, b] : vaf.attacks()) {
    if (vaf.value_index_of(a) == vaf.value_index_of(b) &&
        !af.has_edge(a, b)) {
      report.status = JustificationStatus::same_value_attack_dropped;
      report.offending_edge = Edge(a, b);
      return report;
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& [a, b] : vaf.attacks()) {
    std::size_t va = vaf.value_index_of(a);
    std::size_t vb = vaf.value_index_of(b);
    if (va == vb) continue;
    if (af.has_edge(a, b))
      arcs.emplace(va, vb);
    else
      arcs.emplace(vb, va);
  }
  report.constraints.values = vaf.values();
  for (const auto& [u, w] : arcs)
    report.constraints.constraints.emplace_back(vaf.values()[u],
                                                vaf.values()[w]);
  auto cycle = detail::find_constraint_cycle(vaf.values().size(), arcs);
  if (!cycle.empty()) {
    report.status = JustificationStatus::cyclic_constraints;
    for (std::size_t i : cycle) report.cycle.push_back(vaf.values()[i]);
  }
  return report;
}

/// True iff some audience induces exactly this graph, decided by acyclicity
/// of the derived constraints.
inline bool is_defeat_graph(const Vaf& vaf, const AttackGraph& af) {
  return derive_constraints(vaf, af).justified();
}

/// All strict total orders over cs.values consistent with cs.constraints,
/// in lexicographic order of declared-index sequences. Empty when the
/// constraints are cyclic.
inline std::vector<Audience> linear_extensions(const ConstraintSet& cs,
                                               std::size_t max_values = 8) {
  const std::size_t k = cs.values.size();
  if (k > max_values)
    throw_error(ErrorCode::enumeration_budget_exceeded,
                "linear extension enumeration over " + std::to_string(k) +
                    " values exceeds the budget of " +
                    std::to_string(max_values));
  std::vector<std::size_t> indeg(k, 0);
  std::vector<std::vector<std::size_t>> succ(k);
  std::map<ValueId, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(cs.values[i], i);
  for (const auto& [u, w] : cs.constraints) {
    succ[index.at(u)].push_back(index.at(w));
    ++indeg[index.at(w)];
  }
  std::vector<Audience> out;
  std::vector<bool> placed(k, false);
  std::vector<ValueId> seq;
  seq.reserve(k);
  std::function<void()> rec = [&]() {
    if (seq.size() == k) {
      out.push_back(Audience(seq));
      return;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (placed[i] || indeg[i] != 0) continue;
      placed[i] = true;
      for (std::size_t w : succ[i]) --indeg[w];
      seq.push_back(cs.values[i]);
      rec();
      seq.pop_back();
      for (std::size_t w : succ[i]) ++indeg[w];
      placed[i] = false;
    }
  };
  rec();
  return out;
}

/// The lexicographically smallest linear extension under the declared value
/// order: greedily place the earliest-declared value whose requirements are
/// met. Absent iff the constraints are cyclic.
inline std::optional<Audience> lexmin_extension(const ConstraintSet& cs) {
  const std::size_t k = cs.values.size();
  std::map<ValueId, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(cs.values[i], i);
  std::vector<std::size_t> indeg(k, 0);
  std::vector<std::vector<std::size_t>> succ(k);
  for (const auto& [u, w] : cs.constraints) {
    succ[index.at(u)].push_back(index.at(w));
    ++indeg[index.at(w)];
  }
  std::vector<bool> placed(k, false);
  std::vector<ValueId> seq;
  seq.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!placed[i] && indeg[i] == 0) {
        pick = i;
        break;
      }
    if (pick == k) return std::nullopt;
    placed[pick] = true;
    for (std::size_t w : succ[pick]) --indeg[w];
    seq.push_back(cs.values[pick]);
  }
  return Audience(std::move(seq));
}

/// Exactly the audiences that induce af, via linear extensions of the
/// derived constraints. Empty iff af is not a defeat graph of vaf.
inline std::vector<Audience> enumerate_justifying_audiences(
    const Vaf& vaf, const AttackGraph& af, std::size_t max_values = 8) {
  JustifiabilityReport report = derive_constraints(vaf, af);
  if (!report.justified()) return {};
  return linear_extensions(report.constraints, max_values);
}

/// True iff every pair of distinct values is connected by some attack in
/// one direction or the other; equivalent to every defeat graph having
/// exactly one justifying audience.
inline bool has_unique_justification_property(const Vaf& vaf) {
  const std::size_t k = vaf.values().size();
  std::set<std::pair<std::size_t, std::size_t>> connected;
  for (const auto& [a, b] : vaf.attacks()) {
    std::size_t va = vaf.value_index_of(a);
    std::size_t vb = vaf.value_index_of(b);
    if (va != vb) connected.emplace(std::min(va, vb), std::max(va, vb));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!connected.count({i, j})) return false;
  return true;
}

/// True iff every member of the profile is a defeat graph of vaf.
inline bool is_profile_justified_by(const Vaf& vaf,
                                    const std::vector<AttackGraph>& profile) {
  if (profile.empty())
    throw_error(ErrorCode::empty_profile, "profile has no members");
  for (const auto& af : profile)
    if (!is_defeat_graph(vaf, af)) return false;
  return true;
}

/// Brute-force rationalisation: search value labelings of the profile's
/// arguments (first-use normalized, lexicographically ordered, at most
/// max_values values) for one making every profile member a defeat graph of
/// the framework with the given attack set. Values are named v1, v2, ... in
/// first-use order. Absent when no labeling works within max_values.
inline std::optional<Vaf> find_justifying_vaf(
    const std::vector<AttackGraph>& profile,
    const std::vector<Edge>& candidate_attacks, std::size_t max_values,
    std::size_t max_arguments_bound = 8, std::size_t max_values_bound = 4) {
  if (profile.empty())
    throw_error(ErrorCode::empty_profile, "profile has no members");
  for (const auto& af : profile)
    if (!af.same_argument_set(profile.front()))
      throw_error(ErrorCode::argument_set_mismatch,
                  "profile members range over different argument sets");
  const std::vector<ArgumentId>& args = profile.front().arguments();
  if (args.size() > max_arguments_bound)
    throw_error(ErrorCode::budget_exceeded,
                "rationalisation over " + std::to_string(args.size()) +
                    " arguments exceeds the budget of " +
                    std::to_string(max_arguments_bound));
  if (max_values > max_values_bound)
    throw_error(ErrorCode::budget_exceeded,
                "rationalisation with " + std::to_string(max_values) +
                    " values exceeds the budget of " +
                    std::to_string(max_values_bound));
  std::set<ArgumentId> declared(args.begin(), args.end());
  for (const auto& [a, b] : candidate_attacks)
    if (!declared.count(a) || !declared.count(b)) return std::nullopt;
  {
    std::set<Edge> candidate(candidate_attacks.begin(),
                             candidate_attacks.end());
    for (const auto& af : profile)
      for (const auto& e : af.edges())
        if (!candidate.count(e)) return std::nullopt;
  }
  const std::size_t m = args.size();
  const std::size_t k_cap = std::min(max_values, m);
  std::vector<std::size_t> label(m, 0);
  std::optional<Vaf> found;
  std::function<bool(std::size_t, std::size_t)> rec =
      [&](std::size_t i, std::size_t used) {
        if (i == m) {
          std::vector<ValueId> values;
          values.reserve(used);
          for (std::size_t v = 0; v < used; ++v)
            values.push_back(ValueId("v" + std::to_string(v + 1)));
          std::vector<std::pair<ArgumentId, ValueId>> labeled;
          labeled.reserve(m);
          for (std::size_t j = 0; j < m; ++j)
            labeled.emplace_back(args[j], values[label[j]]);
          Vaf candidate(values, std::move(labeled), candidate_attacks);
          for (const auto& af : profile)
            if (!is_defeat_graph(candidate, af)) return false;
          found = std::move(candidate);
          return true;
        }
        std::size_t limit = std::min(used + 1, k_cap);
        for (std::size_t v = 0; v < limit; ++v) {
          label[i] = v;
          if (rec(i + 1, std::max(used, v + 1))) return true;
        }
        return false;
      };
  if (m == 0) {
    Vaf candidate({}, {}, candidate_attacks);  // empty framework
    for (const auto& af : profile)
      if (!is_defeat_graph(candidate, af)) return std::nullopt;
    return candidate;
  }
  rec(0, 0);
  return found;
}

}  // namespace vba
