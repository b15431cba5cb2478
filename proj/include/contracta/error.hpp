#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contracta {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex index outside [0, n) or set contains such an index.
struct OutOfRange : Error {
  using Error::Error;
};

// Graph order outside the supported range (0..64, or constructor-specific).
struct BadOrder : Error {
  using Error::Error;
};

// Requested edge is not present in the graph.
struct NonEdge : Error {
  using Error::Error;
};

// A splitting specification violates its side conditions (U ∪ W != N(v), etc.).
struct MalformedSpec : Error {
  using Error::Error;
};

// A vertex set claimed to induce a given graph does not.
struct BadWitness : Error {
  using Error::Error;
};

// Operation requires a family-free input but the input is family-exist.
struct NotFree : Error {
  using Error::Error;
};

// Enumeration or construction would exceed the supported size bounds.
struct LimitExceeded : Error {
  using Error::Error;
};

// Unknown catalog identifier.
struct UnknownId : Error {
  using Error::Error;
};

// graph6 parse failure; `offset` is the byte position in the input.
struct MalformedGraph6 : Error {
  std::size_t offset;
  MalformedGraph6(const std::string& what, std::size_t off)
      : Error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Edge-list parse failure; `line` is 1-based.
struct MalformedEdgeList : Error {
  int line;
  MalformedEdgeList(const std::string& what, int ln)
      : Error(what + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

}  // namespace contracta
