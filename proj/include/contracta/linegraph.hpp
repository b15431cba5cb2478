#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contracta/graph.hpp"

namespace contracta {

// Edge-clique partition certifying line-ness: every member is a clique,
// every edge lies in exactly one member, every vertex in at most two.
struct KrauszPartition {
  std::vector<VertexSet> cliques;
};

// Checks the three partition invariants against g, independently of the
// search that produced the partition.
bool krausz_valid(const Graph& g, const KrauszPartition& p);

struct BeinekeResult {
  bool line = false;
  std::string witness_id;             // catalog id of the forbidden graph found
  std::optional<VertexSet> witness;   // vertex set of g inducing it
};

// Line-graph test by the nine forbidden induced subgraphs; on failure the
// first forbidden member (in catalog order) and its embedding are reported.
BeinekeResult is_line_beineke(const Graph& g);

struct KrauszResult {
  bool line = false;
  std::optional<KrauszPartition> partition;
};

// Line-graph test by searching for an edge-clique partition. Backtracks on
// the lowest uncovered edge, branching over the cliques through it (larger
// cliques first); vertices already in two cliques prune eagerly. Intended
// for small orders (the search is exponential in principle).
KrauszResult is_line_krausz(const Graph& g);

}  // namespace contracta
