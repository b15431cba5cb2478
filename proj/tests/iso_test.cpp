#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "contracta/catalog.hpp"
#include "contracta/error.hpp"
#include "contracta/graph.hpp"
#include "contracta/iso.hpp"
#include "doctest.h"

using namespace contracta;

namespace {

// Independent oracle: isomorphism by trying every vertex bijection.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Independent oracle: orbit partition by trying every automorphism.
std::vector<int> brute_orbit_ids(const Graph& g) {
  const int n = g.order();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> perm = id;
  const auto unite = [&id](int a, int b) {
    const int ra = id[a], rb = id[b];
    for (int& x : id)
      if (x == rb) x = ra;
  };
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
    if (ok)
      for (int v = 0; v < n; ++v) unite(std::min(v, perm[v]), std::max(v, perm[v]));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return id;
}

std::vector<Graph> graphs_upto(int k) {
  std::vector<Graph> out;
  for (int n = 1; n <= k; ++n)
    for (Graph& g : enumerate_graphs(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const Graph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {0, 3}});
  CHECK(canonical_form(c4) == canonical_form(c4b));

  const Graph claw = catalog::get("claw").graph;
  const Graph p4 = catalog::path(4);
  CHECK(canonical_form(claw) != canonical_form(p4));
}

TEST_CASE("all labelings of P3 share one canonical form") {
  const Graph p3 = catalog::path(3);
  std::set<std::vector<Word>> forms;
  std::vector<int> pos = {0, 1, 2};
  do {
    forms.insert(canonical_form(p3.relabeled(pos)).words);
  } while (std::next_permutation(pos.begin(), pos.end()));
  CHECK(forms.size() == 1);
}

TEST_CASE("canonical_graph realizes its own form") {
  for (const char* id : {"claw", "bull", "CE3", "L5", "L18"}) {
    const Graph g = catalog::get(id).graph;
    const Graph c = canonical_graph(g);
    CHECK(are_isomorphic(g, c));
    CHECK(canonical_form(c) == canonical_form(g));
  }
}

TEST_CASE("canonical labeling maps the graph onto its canonical form") {
  const Graph g = catalog::get("bull").graph;
  const CanonicalLabeling lab = canonical_labeling(g);
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[lab.order[i]] = i;
  CHECK(g.relabeled(pos) == canonical_graph(g));
}

TEST_CASE("isomorphism spot checks") {
  CHECK(are_isomorphic(catalog::complete(3), catalog::cycle(3)));
  CHECK(are_isomorphic(catalog::get("bull").graph, catalog::get("CS5").graph));
  CHECK(are_isomorphic(catalog::get("L10").graph, catalog::get("CE2").graph));
  CHECK(are_isomorphic(catalog::get("CE3").graph, catalog::complete_bipartite(3, 3)));
  CHECK(!are_isomorphic(catalog::path(4), catalog::get("claw").graph));
  // Same degree sequence, different graphs: C6 vs 2K3.
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!are_isomorphic(catalog::cycle(6), two_triangles));
}

TEST_CASE("isomorphism agrees with the brute-force oracle") {
  const std::vector<Graph> gs = graphs_upto(5);
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i; j < gs.size(); ++j)
      CHECK(are_isomorphic(gs[i], gs[j]) == brute_isomorphic(gs[i], gs[j]));
  // At order 6 restrict to equal degree sequences (the only candidates).
  const std::vector<Graph> g6 = enumerate_graphs(6);
  for (size_t i = 0; i < g6.size(); ++i)
    for (size_t j = i + 1; j < g6.size(); ++j) {
      if (g6[i].degree_sequence() != g6[j].degree_sequence()) continue;
      CHECK(are_isomorphic(g6[i], g6[j]) == brute_isomorphic(g6[i], g6[j]));
    }
}

TEST_CASE("canonical form is stable under random relabelings") {
  std::mt19937 rng(7);
  for (const Graph& g : {catalog::get("L18").graph, catalog::get("CE6").graph,
                         catalog::cycle(7), catalog::get("L32").graph}) {
    const CanonicalForm base = canonical_form(g);
    std::vector<int> pos(g.order());
    std::iota(pos.begin(), pos.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(pos.begin(), pos.end(), rng);
      CHECK(canonical_form(g.relabeled(pos)) == base);
    }
  }
}

TEST_CASE("automorphism orbits of the named graphs") {
  const OrbitPartition claw = automorphism_orbits(catalog::get("claw").graph);
  REQUIRE(claw.classes.size() == 2);
  CHECK(claw.classes[0] == std::vector<int>{0});
  CHECK(claw.classes[1] == std::vector<int>{1, 2, 3});
  CHECK(claw.class_of(2) == claw.class_of(3));
  CHECK(claw.class_of(0) != claw.class_of(1));

  // L2: one fixed vertex, two two-vertex classes.
  std::vector<size_t> sizes;
  for (const auto& c : automorphism_orbits(catalog::get("L2").graph).classes)
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 2});

  // L9: one fixed vertex, the other five in a single class.
  sizes.clear();
  for (const auto& c : automorphism_orbits(catalog::get("L9").graph).classes)
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 5});
}

TEST_CASE("orbit generators are automorphisms") {
  for (const char* id : {"claw", "bull", "L2", "L9", "CE3"}) {
    const Graph g = catalog::get(id).graph;
    for (const std::vector<int>& gen : automorphism_orbits(g).generators) {
      REQUIRE(static_cast<int>(gen.size()) == g.order());
      for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
          CHECK(g.adjacent(u, v) == g.adjacent(gen[u], gen[v]));
    }
  }
}

TEST_CASE("orbits agree with the brute-force oracle") {
  for (const Graph& g : graphs_upto(5)) {
    const std::vector<int> oracle = brute_orbit_ids(g);
    const OrbitPartition got = automorphism_orbits(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v)
        CHECK((got.class_of(u) == got.class_of(v)) == (oracle[u] == oracle[v]));
  }
}

TEST_CASE("induced search") {
  const Graph claw = catalog::get("claw").graph;
  const Graph bull = catalog::get("bull").graph;
  CHECK(!find_induced(bull, claw).has_value());
  CHECK(!find_induced(catalog::get("L3").graph, catalog::get("L2").graph).has_value());
  CHECK(all_induced(catalog::complete(4), catalog::complete(3)).size() == 4);

  const std::optional<Embedding> emb = find_induced(catalog::cycle(6), catalog::path(4));
  REQUIRE(emb.has_value());
  const Graph p4 = catalog::path(4);
  const Graph c6 = catalog::cycle(6);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      CHECK(p4.adjacent(a, b) == c6.adjacent(emb->map[a], emb->map[b]));
}

TEST_CASE("induced search counts match the subset oracle") {
  const std::vector<Graph> hosts = graphs_upto(5);
  const std::vector<Graph> pats = {catalog::path(3), catalog::cycle(3),
                                   catalog::get("claw").graph, catalog::path(4),
                                   catalog::cycle(4)};
  for (const Graph& g : hosts)
    for (const Graph& h : pats) {
      if (h.order() > g.order()) continue;
      // Oracle: test every subset of the right size.
      int count = 0;
      const Word all = g.vertices().bits();
      for (Word mask = 0; mask <= all; ++mask) {
        if ((mask & ~all) != 0) continue;
        const VertexSet s(mask);
        if (s.size() != h.order()) continue;
        if (brute_isomorphic(g.induced(s), h)) ++count;
      }
      const std::vector<VertexSet> found = all_induced(g, h);
      CHECK(static_cast<int>(found.size()) == count);
      CHECK(find_induced(g, h).has_value() == (count > 0));
      CHECK(std::is_sorted(found.begin(), found.end(),
                           [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); }));
    }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK(enumerate_graphs(7).size() == 1044);
  CHECK(enumerate_graphs(1, true).empty());
  CHECK(enumerate_graphs(2, true).size() == 1);
  CHECK(enumerate_graphs(3, true).size() == 2);
  CHECK(enumerate_graphs(4, true).size() == 7);
  CHECK(enumerate_graphs(5, true).size() == 23);
  CHECK(enumerate_graphs(6, true).size() == 122);
  CHECK(enumerate_graphs(7, true).size() == 888);
}

TEST_CASE("enumeration matches labeled brute force") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<Word>> classes;
    const int bits = n * (n - 1) / 2;
    for (Word code = 0; code < (Word{1} << bits); ++code) {
      std::vector<Edge> es;
      int k = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
          if ((code >> k) & 1) es.push_back(Edge(u, v));
      classes.insert(canonical_form(Graph(n, es)).words);
    }
    CHECK(classes.size() == enumerate_graphs(n).size());
  }
}

TEST_CASE("enumeration yields pairwise non-isomorphic graphs") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<Word>> forms;
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(g.order() == n);
      CHECK(forms.insert(canonical_form(g).words).second);
    }
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_graphs(0), BadOrder);
  CHECK_THROWS_AS(enumerate_graphs(10), LimitExceeded);
}
