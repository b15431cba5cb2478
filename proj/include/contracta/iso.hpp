#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "contracta/graph.hpp"

namespace contracta {

// Canonical form of a graph: the lexicographically smallest upper-triangle
// adjacency bit string over all vertex orderings, in column-major (graph6)
// bit order, packed MSB-first so word comparison equals bit-string comparison.
// Two graphs have equal canonical forms iff they are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<Word> words;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    return words <=> o.words;
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> order;  // order[i] = original vertex at canonical position i
};

CanonicalForm canonical_form(const Graph& g);
CanonicalLabeling canonical_labeling(const Graph& g);

// The graph relabeled into its canonical ordering (adjacency bits match form).
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Vertex orbits of the automorphism group, plus the generators found.
struct OrbitPartition {
  std::vector<std::vector<int>> classes;       // sorted by least member
  std::vector<std::vector<int>> generators;    // automorphisms as images
  int class_of(int v) const;
};

OrbitPartition automorphism_orbits(const Graph& g);

// An induced embedding of h into g: map[i] is the g-vertex hosting h-vertex i.
struct Embedding {
  std::vector<int> map;
  VertexSet image() const {
    VertexSet s;
    for (int v : map) s.add(v);
    return s;
  }
};

// First induced copy of h in g (deterministic), or nullopt.
std::optional<Embedding> find_induced(const Graph& g, const Graph& h);

// All vertex sets of g inducing a copy of h, sorted ascending by bit mask.
std::vector<VertexSet> all_induced(const Graph& g, const Graph& h);

// Streams one representative per isomorphism class of graphs of order n
// (canonical augmentation). Deterministic order. n <= 9 supported; counts
// for n = 1..7 are 1, 2, 4, 11, 34, 156, 1044.
void enumerate_graphs(int n, bool no_isolated, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_graphs(int n, bool no_isolated = false);

}  // namespace contracta
