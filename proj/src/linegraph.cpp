#include "contracta/linegraph.hpp"

#include <algorithm>
#include <bit>

#include "contracta/catalog.hpp"
#include "contracta/iso.hpp"

namespace contracta {

bool krausz_valid(const Graph& g, const KrauszPartition& p) {
  const int n = g.order();
  std::vector<int> load(n, 0);
  std::vector<Word> covered(static_cast<size_t>(n), 0);
  for (VertexSet c : p.cliques) {
    if (!c.subset_of(g.vertices()) || c.size() < 2) return false;
    for (int a : c) {
      if (++load[a] > 2) return false;
      for (int b : c) {
        if (b <= a) continue;
        if (!g.adjacent(a, b)) return false;      // not a clique
        if ((covered[a] >> b) & 1) return false;  // edge in two cliques
        covered[a] |= Word{1} << b;
        covered[b] |= Word{1} << a;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    if (g.neighborhood(a).bits() != covered[a]) return false;  // uncovered edge
  return true;
}

BeinekeResult is_line_beineke(const Graph& g) {
  for (int i = 1; i <= 9; ++i) {
    const catalog::NamedGraph& f = catalog::get("L" + std::to_string(i));
    if (std::optional<Embedding> emb = find_induced(g, f.graph))
      return {false, f.id, emb->image()};
  }
  return {true, "", std::nullopt};
}

namespace {

struct KrauszSearch {
  const Graph& g;
  int n;
  std::vector<Word> covered;
  std::vector<int> load;
  std::vector<VertexSet> cliques;

  explicit KrauszSearch(const Graph& gr)
      : g(gr), n(gr.order()), covered(static_cast<size_t>(n), 0), load(static_cast<size_t>(n), 0) {}

  bool edge_covered(int a, int b) const { return (covered[a] >> b) & 1; }

  std::optional<Edge> lowest_uncovered() const {
    for (int a = 0; a < n; ++a) {
      Word rest = (g.neighborhood(a).bits() & ~covered[a]) & ~VertexSet::first(a + 1).bits();
      if (rest) return Edge(a, std::countr_zero(rest));
    }
    return std::nullopt;
  }

  // Subsets of cand (from index i on) that extend {u, v} to a clique whose
  // internal edges are all still uncovered.
  void extensions(const std::vector<int>& cand, size_t i, Word cur, std::vector<Word>& out) const {
    out.push_back(cur);
    for (size_t j = i; j < cand.size(); ++j) {
      const int x = cand[j];
      bool ok = true;
      for (int y : VertexSet(cur)) {
        if (!g.adjacent(x, y) || edge_covered(x, y)) {
          ok = false;
          break;
        }
      }
      if (ok) extensions(cand, j + 1, cur | (Word{1} << x), out);
    }
  }

  void apply(VertexSet clique, int delta) {
    for (int a : clique) {
      load[a] += delta;
      for (int b : clique) {
        if (b <= a) continue;
        covered[a] ^= Word{1} << b;
        covered[b] ^= Word{1} << a;
      }
    }
  }

  bool solve() {
    const std::optional<Edge> e = lowest_uncovered();
    if (!e) return true;
    const int u = e->u, v = e->v;
    if (load[u] >= 2 || load[v] >= 2) return false;

    std::vector<int> cand;
    for (int x : g.neighborhood(u) & g.neighborhood(v))
      if (load[x] < 2 && !edge_covered(u, x) && !edge_covered(v, x)) cand.push_back(x);

    std::vector<Word> exts;
    extensions(cand, 0, 0, exts);
    std::sort(exts.begin(), exts.end(), [](Word a, Word b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });

    for (Word ext : exts) {
      const VertexSet clique = VertexSet(ext) | VertexSet::of({u, v});
      cliques.push_back(clique);
      apply(clique, 1);
      if (solve()) return true;
      apply(clique, -1);
      cliques.pop_back();
    }
    return false;
  }
};

}  // namespace

KrauszResult is_line_krausz(const Graph& g) {
  KrauszSearch search(g);
  if (!search.solve()) return {false, std::nullopt};
  return {true, KrauszPartition{search.cliques}};
}

}  // namespace contracta
