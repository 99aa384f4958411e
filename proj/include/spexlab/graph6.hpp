#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// graph6 text for g (no trailing newline, no ">>graph6<<" header).
std::string graph6_encode(const Graph& g);

/// Parses one graph6 string. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError carrying the byte offset.
Graph graph6_decode(std::string_view text);

/// One graph6 string per line; blank lines skipped. A malformed line
/// throws InvalidInput naming its 1-based line number.
std::vector<Graph> read_graph6_lines(std::istream& in);

} // namespace spexlab
