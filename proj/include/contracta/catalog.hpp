#pragma once

#include <string>
#include <vector>

#include "contracta/family.hpp"
#include "contracta/graph.hpp"

namespace contracta {
namespace catalog {

// A catalog graph: `graph` keeps the transcribed labeling, `source` says
// which classification set the entry belongs to.
struct NamedGraph {
  std::string id;
  Graph graph;
  std::string source;
};

// Catalog lookup; throws UnknownId. Ids: "claw", "bull", "CS1".."CS6",
// "CE1".."CE6", "L1".."L34".
const NamedGraph& get(const std::string& id);

// All entries whose id starts with `prefix` (all entries when empty),
// in catalog order.
std::vector<const NamedGraph*> all(const std::string& prefix = "");

// Id of the catalog entry isomorphic to g, or empty string.
std::string id_of_isomorphic(const Graph& g);

// Parametric families. star(k) has k leaves (star(3) is the claw).
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete(int n);
Graph complete_bipartite(int a, int b);

// Convenience families used throughout: {L1..L9} and {L14..L34}.
const GraphFamily& line_forbidden_family();
const GraphFamily& line_split_family();

}  // namespace catalog
}  // namespace contracta
