#pragma once

#include <span>
#include <string>

#include "contracta/graph.hpp"

namespace contracta {

// graph6: the order, then the upper-triangle bits in column-major order,
// packed into 6-bit groups offset by 63. Accepts an optional ">>graph6<<"
// header and surrounding whitespace; requires zero padding bits and n <= 64.
// Parse errors carry the byte offset of the offending character.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Edge list: header line "n m", then m lines "u v" with 0-based endpoints.
// Rejects self-loops, duplicate edges, and out-of-range endpoints; errors
// carry the 1-based line number.
Graph parse_edgelist(const std::string& text);
std::string emit_edgelist(const Graph& g);

// DOT subset: `graph { ... }` with one `a -- b;` statement per edge and a
// bare statement per isolated vertex. When labels are given (one per
// vertex), they are emitted as quoted node names instead of indices.
std::string emit_dot(const Graph& g, std::span<const std::string> labels = {});

}  // namespace contracta
