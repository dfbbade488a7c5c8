#pragma once

#include <string>
#include <string_view>

#include "unigraph/graph.hpp"

namespace unigraph {

/// Parses one graph6 record. An optional ">>graph6<<" header and a single
/// trailing newline are accepted. Throws Graph6Error with the byte offset of
/// the first fault.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 without header or newline.
std::string emit_graph6(const Graph& g);

}  // namespace unigraph
