#pragma once

#include <string>
#include <string_view>

#include "gim/graph.hpp"

namespace gim::io {

/// graph6 encoding of g (no header, no trailing newline).
std::string to_graph6(const Graph& g);
/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// newline are accepted; anything else malformed throws InvalidInput.
Graph from_graph6(std::string_view text);

/// Edge-list text: "n m" header line, then m lines "u v" (0-indexed).
/// Blank lines and lines starting with '#' are ignored.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Reads a graph file, choosing the parser by extension (.g6 or .el).
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gim::io
