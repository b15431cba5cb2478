#include "contracta/certify.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "contracta/catalog.hpp"
#include "contracta/critical.hpp"
#include "contracta/error.hpp"
#include "contracta/splitting.hpp"

namespace contracta {

bool is_strongly_free(const Graph& g, const GraphFamily& fam) {
  if (!is_free(g, fam)) return false;
  for (const Edge& e : g.edges())
    if (!is_free(g.contract(e), fam)) return false;
  return true;
}

bool strongly_free_via_split_set(const Graph& g, const GraphFamily& fam) {
  if (!is_free(g, fam)) throw NotFree("graph is fam-exist; strong freeness is undefined");
  return is_free(g, cached_free_split_set(fam));
}

const GraphFamily& cached_free_split_set(const GraphFamily& fam) {
  static std::mutex mu;
  static std::map<std::vector<Word>, GraphFamily> cache;
  std::vector<Word> key = fam.signature();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  GraphFamily fs = free_split_set(fam);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(fs)).first->second;
}

CertifyVerdict certify(const Graph& g, const GraphFamily& fam) {
  CertifyVerdict v;
  v.g_is_free = is_free(g, fam);
  v.all_contractions_free = true;
  std::optional<Edge> flip;
  for (const Edge& e : g.edges()) {
    const bool free_after = is_free(g.contract(e), fam);
    if (!free_after) v.all_contractions_free = false;
    if (free_after != v.g_is_free && !flip) flip = e;
  }

  const GraphFamily& fs = cached_free_split_set(fam);
  if (std::optional<ExistWitness> w = witness_exist(g, fs)) {
    v.applicable = false;
    v.reason = CertifyReason::FsWitness;
    v.fs_witness = w;
    v.counterexample_edge = flip;
    return v;
  }
  if (is_critically_exist(g, fam).verdict) {
    v.applicable = false;
    v.reason = CertifyReason::CriticalIsomorphism;
    v.critical_id = catalog::id_of_isomorphic(g);
    v.counterexample_edge = flip;
    return v;
  }
  v.applicable = true;
  v.reason = CertifyReason::ApplicableStable;
  return v;
}

}  // namespace contracta
