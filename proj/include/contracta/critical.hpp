#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contracta/family.hpp"
#include "contracta/graph.hpp"

namespace contracta {

// Image of a vertex set under contraction of e = uv: if S misses both
// endpoints it is carried over unchanged (relabeled); otherwise the merged
// vertex (index n-2 of g/e) replaces whichever endpoints S contained.
// |f(S)| = |S| unless both endpoints lie in S, where it is |S| - 1.
VertexSet f_map(const Graph& g, VertexSet s, Edge e);

// Whether contracting e destroys the copy of h induced by s, i.e. whether
// (g/e)[f(S)] is not isomorphic to h — checked directly by contraction.
// Throws BadWitness unless g[s] ≅ h, NonEdge unless e ∈ E(g).
bool is_critical_for(const Graph& g, VertexSet s, Edge e, const Graph& h);

// The same predicate via its closed form: critical iff both endpoints lie in
// S, or exactly one does and the outside endpoint is not a corner dominated
// by the inside endpoint within g[S ∪ {outside}].
bool is_critical_for_characterized(const Graph& g, VertexSet s, Edge e, const Graph& h);

// Necessary conditions on every witness for g to be critically fam-exist:
// the vertices outside S form an independent set, and no outside vertex is a
// corner dominated by a witness vertex.
struct WitnessConditions {
  int member = 0;     // index into elm(fam)
  VertexSet witness;  // induces that member in g
  bool independent_ok = false;
  bool corner_ok = false;
};
std::vector<WitnessConditions> witness_conditions(const Graph& g, const GraphFamily& fam);

// Outside vertices whose attachment already rules out critical existence:
// adjacent to exactly one vertex, to exactly two adjacent vertices, to
// exactly three vertices inducing P3 or C3, or to a vertex of degree n-1.
// Pruning aid only; soundness is cross-checked against the unpruned filter.
struct PruningViolation {
  int vertex = 0;
  std::string reason;
};
std::vector<PruningViolation> pruning_violations(const Graph& g, VertexSet s);

struct CriticalWitness {
  int member = 0;
  VertexSet vertices;
  // First edge whose contraction keeps this witness's member intact, i.e. an
  // edge that is not critical for it; absent when every edge is critical.
  std::optional<Edge> surviving_edge;
  bool independent_ok = false;
  bool corner_ok = false;
};

struct CriticalReport {
  bool verdict = false;  // fam-exist and every contraction is fam-free
  bool exist = false;    // fam-exist at all
  // First edge whose contraction is still fam-exist; present iff the graph
  // is fam-exist but not critically so.
  std::optional<Edge> counterexample;
  std::vector<CriticalWitness> witnesses;  // every induced copy of an elm member
};

// Critically-fam-exist test with full diagnostics.
CriticalReport is_critically_exist(const Graph& g, const GraphFamily& fam);

// All critically-fam-exist graphs with at most max_n vertices and no
// isolated vertices, up to isomorphism. Candidates are an elm-member copy
// plus independent extra vertices attached inside it — the shape forced by
// the witness conditions; `prune` additionally discards candidates with a
// pruning violation before the full test. Throws LimitExceeded for
// max_n > 9 (the canonical-ordering range).
GraphFamily enumerate_critical(const GraphFamily& fam, int max_n, bool prune = true);

}  // namespace contracta
