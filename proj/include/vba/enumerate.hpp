#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "vba/core.hpp"
#include "vba/error.hpp"

namespace vba {

/// All permutations of {0, ..., k-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> index_permutations(
    std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// All length-n tuples over {0, ..., base-1} in lexicographic order.
/// Empty when base is 0 and n > 0; the single empty tuple when n is 0.
inline std::vector<std::vector<std::size_t>> index_tuples(std::size_t base,
                                                          std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (base == 0) return out;
  std::vector<std::size_t> t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] + 1 == base) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

/// Length-n tuples over {0, ..., weights.size()-1} ordered by total weight,
/// then lexicographically. This is the canonical enumeration order for
/// profiles of graphs, with a graph's weight being its edge count.
inline std::vector<std::vector<std::size_t>> weighted_tuples(
    const std::vector<std::size_t>& weights, std::size_t n) {
  auto tuples = index_tuples(weights.size(), n);
  std::stable_sort(tuples.begin(), tuples.end(),
                   [&](const auto& x, const auto& y) {
                     std::size_t wx = 0, wy = 0;
                     for (std::size_t i : x) wx += weights[i];
                     for (std::size_t i : y) wy += weights[i];
                     return wx < wy;
                   });
  return tuples;
}

/// All audiences over the given values, ordered lexicographically by the
/// sequence of declared value indices; the declared order itself is first.
inline std::vector<Audience> all_audiences(const std::vector<ValueId>& values,
                                           std::size_t max_values = 8) {
  if (values.size() > max_values)
    throw_error(ErrorCode::enumeration_budget_exceeded,
                "audience enumeration over " +
                    std::to_string(values.size()) +
                    " values exceeds the budget of " +
                    std::to_string(max_values));
  std::vector<Audience> out;
  for (const auto& perm : index_permutations(values.size())) {
    std::vector<ValueId> order;
    order.reserve(values.size());
    for (std::size_t i : perm) order.push_back(values[i]);
    out.push_back(Audience(std::move(order)));
  }
  return out;
}

inline std::vector<Audience> all_audiences(const Vaf& vaf,
                                           std::size_t max_values = 8) {
  return all_audiences(vaf.values(), max_values);
}

/// All ordered argument pairs, self-loops included, in declared index order.
inline std::vector<Edge> edge_universe(const std::vector<ArgumentId>& args) {
  std::vector<Edge> out;
  out.reserve(args.size() * args.size());
  for (const auto& a : args)
    for (const auto& b : args) out.emplace_back(a, b);
  return out;
}

/// The graph's edges as sorted indices into an ordered edge universe.
/// Together with the edge count this is the graph's canonical key.
inline std::vector<std::size_t> graph_key(const AttackGraph& g,
                                          const std::vector<Edge>& universe) {
  std::map<Edge, std::size_t> where;
  for (std::size_t i = 0; i < universe.size(); ++i)
    where.emplace(universe[i], i);
  std::vector<std::size_t> key;
  key.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    auto it = where.find(e);
    if (it == where.end())
      throw_error(ErrorCode::invariant_violation,
                  "graph edge outside the given edge universe");
    key.push_back(it->second);
  }
  std::sort(key.begin(), key.end());
  return key;
}

/// Sorts graphs into canonical order: edge count first, then the
/// lexicographic order of their universe-index lists.
inline void sort_graphs_canonically(std::vector<AttackGraph>& graphs,
                                    const std::vector<Edge>& universe) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
  keyed.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    keyed.emplace_back(graph_key(graphs[i], universe), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size())
      return x.first.size() < y.first.size();
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  std::vector<AttackGraph> sorted;
  sorted.reserve(graphs.size());
  for (const auto& [key, i] : keyed) sorted.push_back(std::move(graphs[i]));
  graphs = std::move(sorted);
}

/// Every directed graph over the given arguments (the full power set of the
/// edge universe) in canonical order. Sized guard: at most 16 possible
/// edges, i.e. 65536 graphs.
inline std::vector<AttackGraph> all_graphs(
    const std::vector<ArgumentId>& args) {
  const auto universe = edge_universe(args);
  if (universe.size() > 16)
    throw_error(ErrorCode::enumeration_budget_exceeded,
                "graph enumeration over " + std::to_string(universe.size()) +
                    " possible edges exceeds the budget of 16");
  std::vector<AttackGraph> out;
  out.reserve(std::size_t{1} << universe.size());
  std::vector<std::size_t> combo;
  // Subsets grouped by size, each size in lexicographic index order, which
  // is exactly the canonical graph order.
  auto emit = [&]() {
    std::vector<Edge> edges;
    edges.reserve(combo.size());
    for (std::size_t i : combo) edges.push_back(universe[i]);
    out.push_back(AttackGraph(args, std::move(edges)));
  };
  for (std::size_t size = 0; size <= universe.size(); ++size) {
    combo.resize(size);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    if (size == 0) {
      emit();
      continue;
    }
    while (true) {
      emit();
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == universe.size() - (size - i) - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return out;
}

/// Every defeat graph of the framework: induce under all |values|!
/// audiences, deduplicate, and sort canonically against vaf.attacks().
inline std::vector<AttackGraph> enumerate_defeat_graphs(
    const Vaf& vaf, std::size_t max_values = 8) {
  std::vector<AttackGraph> out;
  for (const auto& audience : all_audiences(vaf, max_values)) {
    AttackGraph g = induce_defeat_graph(vaf, audience);
    if (std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  }
  sort_graphs_canonically(out, vaf.attacks());
  return out;
}

}  // namespace vba
