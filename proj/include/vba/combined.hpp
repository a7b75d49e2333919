#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vba/core.hpp"
#include "vba/error.hpp"
#include "vba/graphagg.hpp"
#include "vba/justification.hpp"
#include "vba/prefagg.hpp"

namespace vba {

/// Picks, for each submitted graph, the lexicographically smallest
/// justifying audience under the framework's declared value order. Depends
/// only on the graph, never on the agent index.
struct LexMinSelector {};

/// Caller-supplied audience per agent; each entry must induce that agent's
/// graph, which is validated eagerly.
struct ExplicitSelector {
  std::vector<Audience> table;
};

struct JustificationSelector {
  std::variant<LexMinSelector, ExplicitSelector> selector;
};

struct ProvidedVaf {
  Vaf vaf;
};

/// Delegates to find_justifying_vaf over the given attack set.
struct BruteForceVaf {
  std::vector<Edge> candidate_attacks;
  std::size_t max_values = 4;
};

struct VafSelector {
  std::variant<ProvidedVaf, BruteForceVaf> selector;
};

/// One justifying audience per agent; every returned audience induces that
/// agent's graph.
inline PreferenceProfile select_justifications(
    const JustificationSelector& selector, const Vaf& vaf,
    const GraphProfile& profile) {
  if (!is_profile_justified_by(vaf, profile.graphs()))
    throw_error(ErrorCode::unjustified_input,
                "profile contains a graph that is not a defeat graph of the "
                "framework");
  std::vector<Audience> chosen;
  chosen.reserve(profile.size());
  if (const auto* explicit_table =
          std::get_if<ExplicitSelector>(&selector.selector)) {
    if (explicit_table->table.size() != profile.size())
      throw_error(ErrorCode::invalid_explicit_table,
                  "explicit table has " +
                      std::to_string(explicit_table->table.size()) +
                      " audiences for a profile of " +
                      std::to_string(profile.size()));
    for (std::size_t i = 0; i < profile.size(); ++i) {
      const Audience& audience = explicit_table->table[i];
      try {
        if (!(induce_defeat_graph(vaf, audience) == profile[i]))
          throw_error(ErrorCode::invalid_explicit_table,
                      "explicit audience " + std::to_string(i) +
                          " does not induce agent " + std::to_string(i) +
                          "'s graph");
      } catch (const Error& e) {
        if (e.code() == ErrorCode::audience_mismatch)
          throw_error(ErrorCode::invalid_explicit_table,
                      "explicit audience " + std::to_string(i) +
                          " does not order the framework's values");
        throw;
      }
      chosen.push_back(audience);
    }
    return PreferenceProfile(std::move(chosen));
  }
  for (const auto& g : profile.graphs()) {
    auto audience =
        lexmin_extension(derive_constraints(vaf, g).constraints);
    // Justification was checked above, so an extension exists.
    chosen.push_back(std::move(*audience));
  }
  return PreferenceProfile(std::move(chosen));
}

/// Select a justifying audience per graph, aggregate with the preference
/// rule, and induce the collective defeat graph. An unset Borda tiebreak
/// defaults to the framework's declared value order. The output is always a
/// defeat graph of vaf.
inline AttackGraph combined_mechanism(const PrefRuleSpec& pref_rule,
                                      const JustificationSelector& selector,
                                      const Vaf& vaf,
                                      const GraphProfile& profile) {
  PreferenceProfile prefs = select_justifications(selector, vaf, profile);
  Audience collective =
      aggregate_prefs(resolve_tiebreak(pref_rule, vaf.values()), prefs);
  return induce_defeat_graph(vaf, collective);
}

/// The framework named by the selector; brute force searches candidate
/// labelings and fails with NoJustifyingVaf when none fits.
inline Vaf resolve_vaf(const VafSelector& vaf_selector,
                       const GraphProfile& profile) {
  if (const auto* provided = std::get_if<ProvidedVaf>(&vaf_selector.selector))
    return provided->vaf;
  const auto& brute = std::get<BruteForceVaf>(vaf_selector.selector);
  auto found = find_justifying_vaf(profile.graphs(), brute.candidate_attacks,
                                   brute.max_values);
  if (!found)
    throw_error(ErrorCode::no_justifying_vaf,
                "no value labeling within bounds makes every profile member "
                "a defeat graph");
  return *found;
}

inline AttackGraph combined_mechanism_fixed_vaf(
    const PrefRuleSpec& pref_rule, const VafSelector& vaf_selector,
    const JustificationSelector& selector, const GraphProfile& profile) {
  return combined_mechanism(pref_rule, selector,
                            resolve_vaf(vaf_selector, profile), profile);
}

}  // namespace vba
