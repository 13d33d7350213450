#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "lapcoef/graph.hpp"

namespace lapcoef {

enum class GraphFormat { kEdgeList, kGraph6 };

GraphFormat parse_format(std::string_view name);

// Edge list: first line "n", then one "u v" per non-empty line with 0 <= u < v < n.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6, one graph per string (without trailing newline). An optional
// ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

struct StreamStats {
  std::size_t parsed = 0;
  std::size_t malformed = 0;
};

// Reads a graph6 stream line by line. Malformed lines are counted and skipped.
StreamStats for_each_graph6(std::istream& in, const std::function<void(Graph)>& visit);

}  // namespace lapcoef
