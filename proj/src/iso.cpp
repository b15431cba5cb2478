#include "contracta/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace contracta {

namespace {

// Branch-and-bound search for the lexicographically smallest upper-triangle
// bit string. Placing the vertex at position p appends the p bits joining it
// to positions 0..p-1 (column-major), so every partial ordering owns a prefix
// of the final string and can be pruned against the best known prefix.
struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<Word> nbr;
  std::vector<int> try_order;
  std::vector<int> perm;
  std::vector<Word> cur, best;
  std::vector<int> best_perm;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
    total_bits = n * (n - 1) / 2;
    int words = (total_bits + 63) / 64;
    cur.assign(words, 0);
    best.assign(words, 0);
    perm.assign(n, -1);
    nbr.reserve(n);
    for (int v = 0; v < n; ++v) nbr.push_back(g.neighborhood(v).bits());

    // Heuristic try order only; correctness rests on the prefix pruning.
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> keyed;
    for (int v = 0; v < n; ++v) {
      std::vector<int> nd;
      for (int w : g.neighborhood(v)) nd.push_back(g.degree(w));
      std::sort(nd.begin(), nd.end());
      keyed.push_back({{g.degree(v), std::move(nd)}, v});
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [k, v] : keyed) try_order.push_back(v);
  }

  void place_bits(int pos, int v) {
    int base = pos * (pos - 1) / 2;
    for (int j = 0; j < pos; ++j) {
      int bit = base + j;
      Word mask = Word{1} << (63 - (bit & 63));
      if ((nbr[v] >> perm[j]) & 1)
        cur[bit >> 6] |= mask;
      else
        cur[bit >> 6] &= ~mask;
    }
  }

  // Compares cur[0..bits) with best[0..bits); <0, 0, >0.
  int cmp_prefix(int bits) const {
    int full = bits >> 6, rem = bits & 63;
    for (int w = 0; w < full; ++w)
      if (cur[w] != best[w]) return cur[w] < best[w] ? -1 : 1;
    if (rem) {
      Word mask = ~Word{0} << (64 - rem);
      Word a = cur[full] & mask, b = best[full] & mask;
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  void dfs(int pos, Word used) {
    if (pos == n) {
      if (!have_best || cmp_prefix(total_bits) < 0) {
        best = cur;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (int v : try_order) {
      if ((used >> v) & 1) continue;
      perm[pos] = v;
      place_bits(pos, v);
      if (have_best && cmp_prefix(pos * (pos + 1) / 2) > 0) continue;
      dfs(pos + 1, used | (Word{1} << v));
    }
  }

  CanonicalLabeling run() {
    if (n == 0) return {{0, {}}, {}};
    dfs(0, 0);
    return {{n, best}, best_perm};
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > 9) throw LimitExceeded("canonical ordering supported for n <= 9");
  return CanonSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  CanonicalLabeling lab = canonical_labeling(g);
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[lab.order[i]] = i;
  return g.relabeled(pos);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

int OrbitPartition::class_of(int v) const {
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    for (int w : classes[i])
      if (w == v) return i;
  throw OutOfRange("vertex not in any orbit class");
}

namespace {

std::vector<int> vertex_invariants(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, std::vector<int>>> key(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (int w : g.neighborhood(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    key[v] = {g.degree(v), std::move(nd)};
  }
  std::vector<std::pair<int, std::vector<int>>> uniq(key.begin(), key.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> id(n);
  for (int v = 0; v < n; ++v)
    id[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), key[v]) - uniq.begin());
  return id;
}

// Finds one automorphism with img[a] = b, or nullopt.
std::optional<std::vector<int>> automorphism_mapping(const Graph& g, int a, int b,
                                                     const std::vector<int>& id) {
  int n = g.order();
  std::vector<int> vorder;
  vorder.push_back(a);
  for (int v = 0; v < n; ++v)
    if (v != a) vorder.push_back(v);
  std::vector<int> img(n, -1);
  Word used = 0;

  auto go = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    int v = vorder[k];
    for (int w = 0; w < n; ++w) {
      if (k == 0 && w != b) continue;
      if ((used >> w) & 1) continue;
      if (id[w] != id[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = vorder[j];
        ok = g.adjacent(v, u) == g.adjacent(w, img[u]);
      }
      if (!ok) continue;
      img[v] = w;
      used |= Word{1} << w;
      if (self(self, k + 1)) return true;
      used &= ~(Word{1} << w);
      img[v] = -1;
    }
    return false;
  };
  if (!go(go, 0)) return std::nullopt;
  return img;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

OrbitPartition automorphism_orbits(const Graph& g) {
  int n = g.order();
  OrbitPartition out;
  std::vector<int> id = vertex_invariants(g);
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (id[a] != id[b] || uf.find(a) == uf.find(b)) continue;
      if (auto perm = automorphism_mapping(g, a, b, id)) {
        for (int i = 0; i < n; ++i) uf.unite(i, (*perm)[i]);
        out.generators.push_back(std::move(*perm));
      }
    }
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  for (auto& [root, members] : by_root) out.classes.push_back(members);
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

// Backtracking search for induced copies of h in g. Placement order is
// connectivity-first; candidate sets are maintained as bit masks.
struct InducedSearch {
  const Graph& g;
  const Graph& h;
  int gn, hn;
  std::vector<int> horder;
  std::vector<Word> deg_ok;  // per h-vertex: g-vertices with sufficient degree
  std::vector<int> img;      // img[h-vertex]
  Word used = 0;
  bool collect_all = false;
  std::set<Word>* images = nullptr;
  std::optional<Embedding> found;

  InducedSearch(const Graph& gg, const Graph& hh) : g(gg), h(hh), gn(gg.order()), hn(hh.order()) {
    img.assign(hn, -1);
    // order: max degree first, then most placed neighbors
    std::vector<bool> placed(hn, false);
    for (int step = 0; step < hn; ++step) {
      int pick = -1, pick_conn = -1, pick_deg = -1;
      for (int v = 0; v < hn; ++v) {
        if (placed[v]) continue;
        int conn = 0;
        for (int u : horder) conn += h.adjacent(v, u) ? 1 : 0;
        int deg = h.degree(v);
        if (conn > pick_conn || (conn == pick_conn && deg > pick_deg)) {
          pick = v;
          pick_conn = conn;
          pick_deg = deg;
        }
      }
      horder.push_back(pick);
      placed[pick] = true;
    }
    deg_ok.assign(hn, 0);
    for (int v = 0; v < hn; ++v)
      for (int w = 0; w < gn; ++w)
        if (g.degree(w) >= h.degree(v)) deg_ok[v] |= Word{1} << w;
  }

  bool dfs(int k) {
    if (k == hn) {
      if (collect_all) {
        Word im = 0;
        for (int v : img) im |= Word{1} << v;
        images->insert(im);
        return false;  // keep searching
      }
      found = Embedding{img};
      return true;
    }
    int hv = horder[k];
    Word cand = deg_ok[hv] & ~used & g.vertices().bits();
    for (int j = 0; j < k && cand; ++j) {
      int hu = horder[j];
      Word nb = g.neighborhood(img[hu]).bits();
      cand &= h.adjacent(hv, hu) ? nb : ~nb;
    }
    for (int w : VertexSet(cand)) {
      img[hv] = w;
      used |= Word{1} << w;
      if (dfs(k + 1)) return true;
      used &= ~(Word{1} << w);
      img[hv] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const Graph& h) {
  if (h.order() == 0) return Embedding{{}};
  if (h.order() > g.order()) return std::nullopt;
  InducedSearch s(g, h);
  s.dfs(0);
  return s.found;
}

std::vector<VertexSet> all_induced(const Graph& g, const Graph& h) {
  std::vector<VertexSet> out;
  if (h.order() == 0) return {VertexSet{}};
  if (h.order() > g.order()) return out;
  std::set<Word> images;
  InducedSearch s(g, h);
  s.collect_all = true;
  s.images = &images;
  s.dfs(0);
  out.reserve(images.size());
  for (Word im : images) out.push_back(VertexSet(im));
  return out;
}

// Canonical augmentation: a child of order k+1 is kept iff deleting the
// vertex at its last canonical position recovers the parent's class; children
// of one parent are deduplicated by canonical form. Each class of order n is
// produced exactly once.
void enumerate_graphs(int n, bool no_isolated, const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw BadOrder("enumeration needs n >= 1");
  if (n > 9) throw LimitExceeded("enumeration supported for n <= 9");
  std::vector<Graph> level = {Graph(1, {})};
  std::vector<CanonicalForm> level_forms = {canonical_form(level[0])};
  for (int k = 1; k < n; ++k) {
    std::vector<Graph> next;
    std::vector<CanonicalForm> next_forms;
    std::set<CanonicalForm> seen;
    for (size_t p = 0; p < level.size(); ++p) {
      for (Word mask = 0; mask < (Word{1} << k); ++mask) {
        Graph child = level[p].with_vertex(VertexSet(mask));
        CanonicalLabeling lab = canonical_labeling(child);
        if (seen.contains(lab.form)) continue;
        int cdv = lab.order[k];
        Graph minus = child.induced(child.vertices() - VertexSet::single(cdv));
        if (canonical_form(minus) != level_forms[p]) continue;
        seen.insert(lab.form);
        next.push_back(std::move(child));
        next_forms.push_back(std::move(lab.form));
      }
    }
    level = std::move(next);
    level_forms = std::move(next_forms);
  }
  for (const Graph& g : level)
    if (!no_isolated || !g.has_isolated()) fn(g);
}

std::vector<Graph> enumerate_graphs(int n, bool no_isolated) {
  std::vector<Graph> out;
  enumerate_graphs(n, no_isolated, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace contracta
