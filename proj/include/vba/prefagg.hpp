#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vba/core.hpp"
#include "vba/error.hpp"

namespace vba {

/// Non-empty sequence of audiences over a common value set.
class PreferenceProfile {
 public:
  explicit PreferenceProfile(std::vector<Audience> audiences)
      : audiences_(std::move(audiences)) {
    if (audiences_.empty())
      throw_error(ErrorCode::empty_profile, "profile has no members");
    std::vector<ValueId> base = sorted_values(audiences_.front());
    for (const auto& a : audiences_)
      if (sorted_values(a) != base)
        throw_error(ErrorCode::audience_mismatch,
                    "profile members order different value sets");
  }

  const std::vector<Audience>& audiences() const noexcept {
    return audiences_;
  }
  std::size_t size() const noexcept { return audiences_.size(); }
  const Audience& operator[](std::size_t i) const { return audiences_[i]; }

  /// The common value set, sorted by name.
  std::vector<ValueId> value_set() const {
    return sorted_values(audiences_.front());
  }

  friend bool operator==(const PreferenceProfile&,
                         const PreferenceProfile&) = default;

 private:
  static std::vector<ValueId> sorted_values(const Audience& a) {
    std::vector<ValueId> v = a.order();
    std::sort(v.begin(), v.end());
    return v;
  }

  std::vector<Audience> audiences_;
};

/// Rank-sum scoring; ties between equal scores go to the value the tiebreak
/// audience ranks higher. The tiebreak may be left unset and filled in later
/// from a framework's declared value order (see resolve_tiebreak).
struct BordaRule {
  std::optional<Audience> tiebreak;
};

/// Copies the audience of one fixed agent.
struct DictatorRule {
  std::size_t index = 0;
};

struct PrefRuleSpec {
  std::variant<BordaRule, DictatorRule> rule;
};

/// Fills an unset Borda tiebreak with the given value order.
inline PrefRuleSpec resolve_tiebreak(PrefRuleSpec spec,
                                     const std::vector<ValueId>& order) {
  if (auto* borda = std::get_if<BordaRule>(&spec.rule))
    if (!borda->tiebreak) borda->tiebreak = Audience(order);
  return spec;
}

/// Sum over the profile of each value's rank (count of dominated values).
inline std::map<ValueId, std::size_t> borda_scores(
    const PreferenceProfile& profile) {
  std::map<ValueId, std::size_t> scores;
  for (const auto& v : profile.value_set()) scores[v] = 0;
  for (const auto& audience : profile.audiences())
    for (const auto& v : audience.order()) scores[v] += rank(audience, v);
  return scores;
}

/// Applies the rule to the profile, yielding a strict total order.
inline Audience aggregate_prefs(const PrefRuleSpec& spec,
                                const PreferenceProfile& profile) {
  if (const auto* dictator = std::get_if<DictatorRule>(&spec.rule)) {
    if (dictator->index >= profile.size())
      throw_error(ErrorCode::rule_profile_mismatch,
                  "dictator index " + std::to_string(dictator->index) +
                      " out of range for a profile of " +
                      std::to_string(profile.size()));
    return profile[dictator->index];
  }
  const auto& borda = std::get<BordaRule>(spec.rule);
  if (!borda.tiebreak)
    throw_error(ErrorCode::rule_profile_mismatch,
                "borda rule applied without a resolved tiebreak");
  std::vector<ValueId> tiebreak_values = borda.tiebreak->order();
  {
    std::vector<ValueId> a = tiebreak_values;
    std::sort(a.begin(), a.end());
    if (a != profile.value_set())
      throw_error(ErrorCode::rule_profile_mismatch,
                  "borda tiebreak does not order the profile's value set");
  }
  const auto scores = borda_scores(profile);
  // Stable sort on descending score over the tiebreak order: equal scores
  // keep the tiebreak's relative order.
  std::stable_sort(tiebreak_values.begin(), tiebreak_values.end(),
                   [&](const ValueId& x, const ValueId& y) {
                     return scores.at(x) > scores.at(y);
                   });
  return Audience(std::move(tiebreak_values));
}

/// Indices of the agents ranking v1 strictly above v2.
inline std::vector<std::size_t> support_count_pref(
    const PreferenceProfile& profile, const ValueId& v1, const ValueId& v2) {
  if (v1 == v2)
    throw_error(ErrorCode::equal_values,
                "support is defined for distinct values only");
  for (const auto* v : {&v1, &v2})
    if (!profile[0].contains(*v))
      throw_error(ErrorCode::unknown_value,
                  "value '" + v->name() + "' is not part of the profile");
  std::vector<std::size_t> supporters;
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (profile[i].prefers(v1, v2)) supporters.push_back(i);
  return supporters;
}

}  // namespace vba
