#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vba/core.hpp"
#include "vba/error.hpp"

namespace vba {

namespace detail {

inline std::string dot_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '\\' || c == '"') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Renders a graph in declared-argument order so output is byte-stable.
// With a framework context, node labels carry values and `show_blocked`
// additionally draws non-surviving attacks dashed.
inline std::string to_dot(const AttackGraph& graph, const Vaf* context = nullptr,
                          bool show_blocked = false) {
  if (context != nullptr) {
    AttackGraph declared(context->arguments(), {});
    if (!declared.same_argument_set(graph))
      throw_error(ErrorCode::argument_set_mismatch,
                  "graph arguments do not match the framework");
  }

  std::map<ArgumentId, std::size_t> index;
  for (const auto& a : graph.arguments()) index.emplace(a, index.size());

  std::vector<Edge> edges = graph.edges();
  std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(index.at(x.first), index.at(x.second)) <
           std::pair(index.at(y.first), index.at(y.second));
  });

  std::ostringstream out;
  out << "digraph g {\n";
  for (const auto& a : graph.arguments()) {
    out << "  \"" << detail::dot_escape(a.name()) << "\"";
    if (context != nullptr)
      out << " [label=\"" << detail::dot_escape(a.name()) << ", "
          << detail::dot_escape(context->value_of(a).name()) << "\"]";
    out << ";\n";
  }
  for (const auto& e : edges)
    out << "  \"" << detail::dot_escape(e.first.name()) << "\" -> \""
        << detail::dot_escape(e.second.name()) << "\";\n";
  if (show_blocked && context != nullptr) {
    for (const auto& e : context->attacks())
      if (!graph.has_edge(e.first, e.second))
        out << "  \"" << detail::dot_escape(e.first.name()) << "\" -> \""
            << detail::dot_escape(e.second.name())
            << "\" [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vba
