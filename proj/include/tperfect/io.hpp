#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "tperfect/graph.hpp"

namespace tperfect {

/// Malformed edge-list or graph6 text.
class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

enum class GraphFormat { Auto, EdgeList, Graph6 };

/// Edge-list text: first line "n m", then m lines "u v" with 0-based labels.
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// One graph6 record; an optional ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

/// Auto-detection treats text whose first data line holds two integers as an
/// edge list and anything else as graph6.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

/// Reads a whole file, or standard input when `path` is "-".
std::string read_text(const std::string& path, std::istream& stdin_stream);

}  // namespace tperfect
