#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sparsehalf/graph.hpp"

namespace sparsehalf {

/// Parses one graph6 line (an optional ">>graph6<<" prefix is accepted).
/// Throws ParseError on a malformed size prefix, bad characters, wrong
/// length, or nonzero padding bits.
Graph parse_graph6(std::string_view line, std::size_t cap = kDefaultVertexCap);

/// Standard graph6 encoding without header or newline.
std::string to_graph6(const Graph& g);

/// Reads every non-blank line of a graph6 stream. ParseError carries the
/// 1-based line number of the first bad record.
std::vector<Graph> read_graph6(std::istream& in, std::size_t cap = kDefaultVertexCap);

}  // namespace sparsehalf
