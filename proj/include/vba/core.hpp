#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vba/error.hpp"

namespace vba {

/// Interned value name. Comparison is plain string order; the canonical
/// positional order within a framework is Vaf::value_index.
class ValueId {
 public:
  ValueId() = default;
  explicit ValueId(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const ValueId&, const ValueId&) = default;

 private:
  std::string name_;
};

class ArgumentId {
 public:
  ArgumentId() = default;
  explicit ArgumentId(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;

 private:
  std::string name_;
};

/// Directed edge: first attacks (or defeats) second.
using Edge = std::pair<ArgumentId, ArgumentId>;

/// Strict total order over a set of values, most preferred first.
class Audience {
 public:
  Audience() = default;

  explicit Audience(std::vector<ValueId> order) : order_(std::move(order)) {
    std::set<ValueId> seen;
    for (const auto& v : order_) {
      if (v.name().empty())
        throw InvariantViolation("audience contains an empty value name");
      if (!seen.insert(v).second)
        throw InvariantViolation("audience repeats value '" + v.name() + "'");
    }
  }

  const std::vector<ValueId>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

  bool contains(const ValueId& v) const {
    return std::find(order_.begin(), order_.end(), v) != order_.end();
  }

  /// Position from the top; 0 is the most preferred value.
  std::size_t position(const ValueId& v) const {
    auto it = std::find(order_.begin(), order_.end(), v);
    if (it == order_.end())
      throw_error(ErrorCode::unknown_value,
                  "value '" + v.name() + "' is not ordered by the audience");
    return static_cast<std::size_t>(it - order_.begin());
  }

  /// True iff u is strictly preferred to w.
  bool prefers(const ValueId& u, const ValueId& w) const {
    return position(u) < position(w);
  }

  friend bool operator==(const Audience&, const Audience&) = default;

 private:
  std::vector<ValueId> order_;
};

/// Number of values the audience ranks strictly below v: the top value of a
/// k-value audience has rank k-1, the bottom has rank 0.
inline std::size_t rank(const Audience& audience, const ValueId& v) {
  return audience.size() - 1 - audience.position(v);
}

/// Immutable framework: arguments labeled with values plus a directed attack
/// relation. The declared order of values and arguments is the canonical
/// order used by every deterministic enumeration and tie-break downstream.
///
/// Construction enforces: unique non-empty names, labels into the declared
/// value set, attack endpoints declared, and every value labeling at least
/// one argument. Self-attacks are legal. A framework with no arguments (and
/// hence no values and no attacks) is legal.
class Vaf {
 public:
  Vaf(std::vector<ValueId> values,
      std::vector<std::pair<ArgumentId, ValueId>> labeled_arguments,
      std::vector<Edge> attacks)
      : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i].name().empty())
        throw InvariantViolation("empty value name");
      if (!value_index_.emplace(values_[i], i).second)
        throw InvariantViolation("duplicate value '" + values_[i].name() +
                                 "'");
    }
    arguments_.reserve(labeled_arguments.size());
    labels_.reserve(labeled_arguments.size());
    for (auto& [arg, value] : labeled_arguments) {
      if (arg.name().empty()) throw InvariantViolation("empty argument name");
      if (!argument_index_.emplace(arg, arguments_.size()).second)
        throw InvariantViolation("duplicate argument '" + arg.name() + "'");
      auto it = value_index_.find(value);
      if (it == value_index_.end())
        throw InvariantViolation("argument '" + arg.name() +
                                 "' is labeled with undeclared value '" +
                                 value.name() + "'");
      arguments_.push_back(std::move(arg));
      labels_.push_back(it->second);
    }
    std::vector<bool> used(values_.size(), false);
    for (std::size_t label : labels_) used[label] = true;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!used[i])
        throw InvariantViolation("value '" + values_[i].name() +
                                 "' labels no argument");
    attack_pairs_.reserve(attacks.size());
    for (const auto& [a, b] : attacks) {
      auto ai = argument_index_.find(a);
      auto bi = argument_index_.find(b);
      if (ai == argument_index_.end() || bi == argument_index_.end())
        throw InvariantViolation("attack (" + a.name() + ", " + b.name() +
                                 ") has an undeclared endpoint");
      attack_pairs_.emplace_back(ai->second, bi->second);
    }
    std::sort(attack_pairs_.begin(), attack_pairs_.end());
    attack_pairs_.erase(
        std::unique(attack_pairs_.begin(), attack_pairs_.end()),
        attack_pairs_.end());
    attacks_.reserve(attack_pairs_.size());
    for (const auto& [i, j] : attack_pairs_)
      attacks_.emplace_back(arguments_[i], arguments_[j]);
  }

  const std::vector<ValueId>& values() const noexcept { return values_; }
  const std::vector<ArgumentId>& arguments() const noexcept {
    return arguments_;
  }
  /// Attacks sorted by (attacker index, target index), duplicates removed.
  const std::vector<Edge>& attacks() const noexcept { return attacks_; }

  bool has_value(const ValueId& v) const { return value_index_.count(v) > 0; }
  bool has_argument(const ArgumentId& a) const {
    return argument_index_.count(a) > 0;
  }

  std::size_t value_index(const ValueId& v) const {
    auto it = value_index_.find(v);
    if (it == value_index_.end())
      throw_error(ErrorCode::unknown_value,
                  "value '" + v.name() + "' is not part of the framework");
    return it->second;
  }

  std::size_t argument_index(const ArgumentId& a) const {
    auto it = argument_index_.find(a);
    if (it == argument_index_.end())
      throw_error(ErrorCode::unknown_argument, "argument '" + a.name() +
                                                   "' is not part of the "
                                                   "framework");
    return it->second;
  }

  const ValueId& value_of(const ArgumentId& a) const {
    return values_[labels_[argument_index(a)]];
  }

  std::size_t value_index_of(const ArgumentId& a) const {
    return labels_[argument_index(a)];
  }

  bool has_attack(const ArgumentId& a, const ArgumentId& b) const {
    if (!has_argument(a) || !has_argument(b)) return false;
    return std::binary_search(
        attack_pairs_.begin(), attack_pairs_.end(),
        std::pair(argument_index(a), argument_index(b)));
  }

  friend bool operator==(const Vaf& x, const Vaf& y) {
    return x.values_ == y.values_ && x.arguments_ == y.arguments_ &&
           x.labels_ == y.labels_ && x.attack_pairs_ == y.attack_pairs_;
  }

 private:
  std::vector<ValueId> values_;
  std::vector<ArgumentId> arguments_;
  std::vector<std::size_t> labels_;  // argument index -> value index
  std::vector<Edge> attacks_;
  std::vector<std::pair<std::size_t, std::size_t>> attack_pairs_;
  std::map<ValueId, std::size_t> value_index_;
  std::map<ArgumentId, std::size_t> argument_index_;
};

/// Plain directed graph over a fixed argument set. Edges are stored sorted
/// by name pair with duplicates removed, so equality is set equality and is
/// insensitive to the declared argument order.
class AttackGraph {
 public:
  AttackGraph() = default;

  AttackGraph(std::vector<ArgumentId> arguments, std::vector<Edge> edges)
      : arguments_(std::move(arguments)), edges_(std::move(edges)) {
    std::set<ArgumentId> declared;
    for (const auto& a : arguments_) {
      if (a.name().empty()) throw InvariantViolation("empty argument name");
      if (!declared.insert(a).second)
        throw InvariantViolation("duplicate argument '" + a.name() + "'");
    }
    for (const auto& [a, b] : edges_)
      if (!declared.count(a) || !declared.count(b))
        throw InvariantViolation("edge (" + a.name() + ", " + b.name() +
                                 ") has an undeclared endpoint");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  const std::vector<ArgumentId>& arguments() const noexcept {
    return arguments_;
  }
  /// Edges sorted by (attacker name, target name), duplicates removed.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(const ArgumentId& a, const ArgumentId& b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  std::vector<ArgumentId> sorted_arguments() const {
    std::vector<ArgumentId> s = arguments_;
    std::sort(s.begin(), s.end());
    return s;
  }

  bool same_argument_set(const AttackGraph& other) const {
    return sorted_arguments() == other.sorted_arguments();
  }

  friend bool operator==(const AttackGraph& x, const AttackGraph& y) {
    return x.sorted_arguments() == y.sorted_arguments() &&
           x.edges_ == y.edges_;
  }

 private:
  std::vector<ArgumentId> arguments_;
  std::vector<Edge> edges_;
};

/// Throws AudienceMismatch unless the audience orders exactly vaf's values.
inline void require_matching_audience(const Vaf& vaf,
                                      const Audience& audience) {
  bool ok = audience.size() == vaf.values().size();
  if (ok)
    for (const auto& v : audience.order())
      if (!vaf.has_value(v)) {
        ok = false;
        break;
      }
  if (!ok)
    throw_error(ErrorCode::audience_mismatch,
                "audience does not order exactly the framework's values");
}

/// True iff (a, b) is an attack and the audience does not rank val(b)
/// strictly above val(a). Same-value attacks (including self-attacks)
/// always defeat.
inline bool defeats(const Vaf& vaf, const Audience& audience,
                    const ArgumentId& a, const ArgumentId& b) {
  std::size_t va = vaf.value_index_of(a);  // throws UnknownArgument
  std::size_t vb = vaf.value_index_of(b);
  require_matching_audience(vaf, audience);
  if (!vaf.has_attack(a, b)) return false;
  if (va == vb) return true;
  return !audience.prefers(vaf.values()[vb], vaf.values()[va]);
}

/// The subgraph of surviving attacks under the audience. Keeps the full
/// argument set, so isolated arguments are retained.
inline AttackGraph induce_defeat_graph(const Vaf& vaf,
                                       const Audience& audience) {
  require_matching_audience(vaf, audience);
  std::vector<Edge> kept;
  kept.reserve(vaf.attacks().size());
  for (const auto& [a, b] : vaf.attacks()) {
    std::size_t va = vaf.value_index_of(a);
    std::size_t vb = vaf.value_index_of(b);
    if (va == vb || !audience.prefers(vaf.values()[vb], vaf.values()[va]))
      kept.emplace_back(a, b);
  }
  return AttackGraph(vaf.arguments(), std::move(kept));
}

}  // namespace vba
