#pragma once

#include <optional>
#include <string>

#include "contracta/family.hpp"
#include "contracta/graph.hpp"

namespace contracta {

enum class CertifyReason { FsWitness, CriticalIsomorphism, ApplicableStable };

// Outcome of the contraction-stability certificate. When `applicable` the
// equivalence "g is fam-free iff every contraction of g is fam-free" is
// guaranteed, and both sides are reported (they agree by the theory; tests
// assert it). Otherwise `reason` names the blocking structure.
struct CertifyVerdict {
  bool applicable = false;
  CertifyReason reason = CertifyReason::ApplicableStable;
  bool g_is_free = false;
  bool all_contractions_free = false;
  std::optional<ExistWitness> fs_witness;   // set when reason == FsWitness
  std::string critical_id;                  // catalog id, when a match exists
  std::optional<Edge> counterexample_edge;  // contracting it flips freeness
};

// True iff g and every single-edge contraction of g are fam-free.
bool is_strongly_free(const Graph& g, const GraphFamily& fam);

// For a fam-free g, strong freeness equals fs(fam)-freeness; this evaluates
// the right-hand side. Throws NotFree when g is fam-exist.
bool strongly_free_via_split_set(const Graph& g, const GraphFamily& fam);

// fs(fam), computed once per family and cached by its canonical signature.
const GraphFamily& cached_free_split_set(const GraphFamily& fam);

// The stability certificate: not applicable when g contains an fs(fam)
// member (FsWitness) or is critically fam-exist (CriticalIsomorphism, with
// the catalog id attached when the graph is a known one); applicable
// otherwise, with both sides of the equivalence evaluated. The critical test
// runs directly on g, so the verdict does not depend on any precomputed list
// of critical graphs.
CertifyVerdict certify(const Graph& g, const GraphFamily& fam);

}  // namespace contracta
