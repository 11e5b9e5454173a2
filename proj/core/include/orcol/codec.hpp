#pragma once

#include <string>
#include <string_view>

#include "orcol/oriented_graph.hpp"
#include "orcol/simple_graph.hpp"

namespace orcol {

// nauty digraph6 / graph6 text formats. An optional ">>digraph6<<" or
// ">>graph6<<" prefix and trailing whitespace are accepted on input.

/// Throws MalformedHeader, BadLength, LoopArc, DigonArc.
OrientedGraph parse_digraph6(std::string_view text);
std::string emit_digraph6(const OrientedGraph& g);

/// Throws MalformedHeader, BadLength.
SimpleGraph parse_graph6(std::string_view text);
std::string emit_graph6(const SimpleGraph& g);

/// "u v" per line, tail first. Blank lines and lines starting with '#' are
/// skipped. An optional first line "n <count>" fixes the order; otherwise it
/// is one more than the largest vertex mentioned.
OrientedGraph parse_edge_list(std::string_view text);
std::string emit_edge_list(const OrientedGraph& g);

}  // namespace orcol
