#include "contracta/family.hpp"

#include <algorithm>

namespace contracta {

GraphFamily::GraphFamily(std::vector<Graph> members) {
  for (const Graph& g : members) insert(g);
}

bool GraphFamily::insert(const Graph& g) {
  CanonicalForm f = canonical_form(g);
  auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
  if (it != forms_.end() && *it == f) return false;
  size_t pos = static_cast<size_t>(it - forms_.begin());
  forms_.insert(it, std::move(f));
  members_.insert(members_.begin() + pos, canonical_graph(g));
  return true;
}

std::optional<int> GraphFamily::index_of(const Graph& g) const {
  CanonicalForm f = canonical_form(g);
  auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
  if (it != forms_.end() && *it == f) return static_cast<int>(it - forms_.begin());
  return std::nullopt;
}

std::vector<Word> GraphFamily::signature() const {
  std::vector<Word> sig;
  for (const CanonicalForm& f : forms_) {
    sig.push_back(static_cast<Word>(f.n));
    sig.insert(sig.end(), f.words.begin(), f.words.end());
  }
  return sig;
}

bool is_free(const Graph& g, const GraphFamily& fam) {
  for (const Graph& h : fam)
    if (find_induced(g, h)) return false;
  return true;
}

std::optional<ExistWitness> witness_exist(const Graph& g, const GraphFamily& fam) {
  for (int i = 0; i < fam.size(); ++i)
    if (auto emb = find_induced(g, fam[i])) return ExistWitness{i, emb->image()};
  return std::nullopt;
}

GraphFamily elm(const GraphFamily& fam) {
  GraphFamily out;
  for (int i = 0; i < fam.size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < fam.size() && minimal; ++j) {
      if (j == i) continue;
      if (find_induced(fam[i], fam[j])) minimal = false;
    }
    if (minimal) out.insert(fam[i]);
  }
  return out;
}

}  // namespace contracta
