#pragma once

#include "contracta/family.hpp"
#include "contracta/graph.hpp"

namespace contracta {

// splitting(H, v, U, W): remove v, add adjacent vertices u and w with
// N(u) = U ∪ {w} and N(w) = W ∪ {u}, where U ∪ W = N_H(v). The sides may
// overlap; contracting uw recovers H.
struct SplitSpec {
  Graph base;
  int vertex = 0;
  VertexSet u_side;
  VertexSet w_side;
};

// How the covers (U, W) of N(v) are enumerated: each neighbor goes to U, W,
// or both (Overlapping — the definition reads N(v) = U ∪ W with no
// disjointness clause), or to exactly one side (Disjoint, kept so tests can
// show it misses some splits).
enum class CoverMode { Overlapping, Disjoint };

// Applies one splitting. The surviving base vertices keep their relative
// order at indices 0..n-2; u takes index n-1 and w takes index n, where n is
// the base order. Throws MalformedSpec unless u_side ∪ w_side = N(v).
Graph apply_split(const SplitSpec& spec);

// splitting(H, v): every cover of N(v), deduplicated up to isomorphism.
// Throws LimitExceeded when deg(v) > 16 (3^deg covers).
GraphFamily splittings_of_vertex(const Graph& h, int v, CoverMode mode = CoverMode::Overlapping);

// splitting(H): union over the vertices of H. Similar vertices have equal
// splitting sets, so only one representative per automorphism orbit is
// expanded; pass orbit_reduce = false to expand every vertex (the results
// must agree — kept for validation).
GraphFamily splittings(const Graph& h, CoverMode mode = CoverMode::Overlapping,
                       bool orbit_reduce = true);

// splitting(fam): union of splittings over the members.
GraphFamily splittings_family(const GraphFamily& fam, CoverMode mode = CoverMode::Overlapping);

// fs(fam): the fam-free members of splitting(elm(fam)). A graph is a
// fam-free-split iff it is isomorphic to a member of this set.
GraphFamily free_split_set(const GraphFamily& fam, CoverMode mode = CoverMode::Overlapping);

}  // namespace contracta
