#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cutcount/graph.hpp"

namespace cutcount {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decodes graph6. The upper triangle is read column by column:
/// (0,1), (0,2), (1,2), (0,3), ... six bits per character, high bit first.
/// Accepts the one-byte size form and the '~'-prefixed form up to n = 64.
/// A single trailing newline is ignored.
Graph parse_graph6(std::string_view text);

/// Encodes in the one-byte size form; throws InvalidGraph for n > 62.
std::string serialize_graph6(const Graph& g);

/// Reads "n=<int>" followed by one "u v" pair per line (0-based). Pairs may
/// be in any order; duplicates and self-loops are errors.
Graph parse_edge_list(std::string_view text);

/// Canonical text: header line, then sorted pairs with u < v.
std::string serialize_edge_list(const Graph& g);

/// DOT text; vertices in `highlight` are filled.
std::string export_dot(const Graph& g, VertexSet highlight = 0);

}  // namespace cutcount
