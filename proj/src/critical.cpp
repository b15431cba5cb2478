#include "contracta/critical.hpp"

#include <bit>
#include <vector>

#include "contracta/error.hpp"
#include "contracta/iso.hpp"

namespace contracta {
namespace {

void require_edge(const Graph& g, Edge e) {
  if (!g.adjacent(e.u, e.v)) throw NonEdge("contraction edge is absent from the graph");
}

void require_witness(const Graph& g, VertexSet s, const Graph& h) {
  if (!are_isomorphic(g.induced(s), h))
    throw BadWitness("vertex set does not induce the reference graph");
}

bool witness_independent(const Graph& g, VertexSet s) {
  return g.is_independent(g.vertices() - s);
}

bool witness_corner_free(const Graph& g, VertexSet s) {
  for (int a : g.vertices() - s)
    for (int b : s)
      if (g.is_corner_dominated(a, b)) return false;
  return true;
}

// Verdict without diagnostics; mins must be elm(fam).
bool critically_exist_verdict(const Graph& g, const GraphFamily& mins) {
  if (is_free(g, mins)) return false;
  for (const Edge& e : g.edges())
    if (!is_free(g.contract(e), mins)) return false;
  return true;
}

}  // namespace

VertexSet f_map(const Graph& g, VertexSet s, Edge e) {
  require_edge(g, e);
  if (!s.subset_of(g.vertices())) throw OutOfRange("vertex set exceeds the graph");
  VertexSet out;
  bool touched = false;
  for (int x : s) {
    if (x == e.u || x == e.v) {
      touched = true;
      continue;
    }
    out.add(x - (x > e.u ? 1 : 0) - (x > e.v ? 1 : 0));
  }
  if (touched) out.add(g.order() - 2);
  return out;
}

bool is_critical_for(const Graph& g, VertexSet s, Edge e, const Graph& h) {
  require_edge(g, e);
  require_witness(g, s, h);
  return !are_isomorphic(g.contract(e).induced(f_map(g, s, e)), h);
}

bool is_critical_for_characterized(const Graph& g, VertexSet s, Edge e, const Graph& h) {
  require_edge(g, e);
  require_witness(g, s, h);
  const bool u_in = s.contains(e.u);
  const bool v_in = s.contains(e.v);
  if (u_in && v_in) return true;
  if (!u_in && !v_in) return false;
  const int outside = u_in ? e.v : e.u;
  const int inside = u_in ? e.u : e.v;
  const VertexSet keep = s | VertexSet::single(outside);
  const Graph sub = g.induced(keep);
  auto rank = [&](int x) { return std::popcount(keep.bits() & ((Word{1} << x) - 1)); };
  return !sub.is_corner_dominated(rank(outside), rank(inside));
}

std::vector<WitnessConditions> witness_conditions(const Graph& g, const GraphFamily& fam) {
  std::vector<WitnessConditions> out;
  const GraphFamily mins = elm(fam);
  for (int m = 0; m < mins.size(); ++m)
    for (VertexSet s : all_induced(g, mins[m]))
      out.push_back({m, s, witness_independent(g, s), witness_corner_free(g, s)});
  return out;
}

std::vector<PruningViolation> pruning_violations(const Graph& g, VertexSet s) {
  std::vector<PruningViolation> out;
  const int n = g.order();
  for (int x : g.vertices() - s) {
    const VertexSet nx = g.neighborhood(x);
    const int d = nx.size();
    if (d == 1) {
      out.push_back({x, "adjacent to exactly one vertex"});
      continue;
    }
    if (d == 2) {
      const std::vector<int> pair = nx.to_vector();
      if (g.adjacent(pair[0], pair[1])) {
        out.push_back({x, "adjacent to exactly two adjacent vertices"});
        continue;
      }
    }
    if (d == 3) {
      const std::vector<int> tri = nx.to_vector();
      int inner = g.adjacent(tri[0], tri[1]) + g.adjacent(tri[0], tri[2]) +
                  g.adjacent(tri[1], tri[2]);
      if (inner >= 2) {  // exactly P3 (2 edges) or C3 (3 edges)
        out.push_back({x, "adjacent to exactly three vertices inducing P3 or C3"});
        continue;
      }
    }
    for (int b : nx) {
      if (g.degree(b) == n - 1) {
        out.push_back({x, "adjacent to a vertex of degree n-1"});
        break;
      }
    }
  }
  return out;
}

CriticalReport is_critically_exist(const Graph& g, const GraphFamily& fam) {
  CriticalReport rep;
  const GraphFamily mins = elm(fam);
  const std::vector<Edge> edges = g.edges();
  for (int m = 0; m < mins.size(); ++m) {
    for (VertexSet s : all_induced(g, mins[m])) {
      CriticalWitness w;
      w.member = m;
      w.vertices = s;
      w.independent_ok = witness_independent(g, s);
      w.corner_ok = witness_corner_free(g, s);
      for (const Edge& e : edges) {
        if (!is_critical_for(g, s, e, mins[m])) {
          w.surviving_edge = e;
          break;
        }
      }
      rep.witnesses.push_back(w);
    }
  }
  rep.exist = !rep.witnesses.empty();
  if (!rep.exist) return rep;
  for (const Edge& e : edges) {
    if (!is_free(g.contract(e), mins)) {
      rep.counterexample = e;
      break;
    }
  }
  rep.verdict = !rep.counterexample.has_value();
  return rep;
}

GraphFamily enumerate_critical(const GraphFamily& fam, int max_n, bool prune) {
  if (max_n > 9) throw LimitExceeded("critical enumeration supports max_n <= 9");
  const GraphFamily mins = elm(fam);
  GraphFamily seen;  // every candidate, to test each isomorphism class once
  GraphFamily out;

  for (const Graph& h : mins) {
    const int k = h.order();
    if (k > max_n || k == 0) continue;
    const Word top = (Word{1} << k) - 1;
    const VertexSet base = VertexSet::first(k);

    // Candidate = copy of h plus outside vertices with the recorded
    // neighborhood masks; masks are nondecreasing, so each multiset of
    // attachments is built exactly once.
    std::vector<Word> masks;
    auto consider = [&](const Graph& g) {
      if (g.has_isolated()) return;
      if (prune) {
        if (!witness_corner_free(g, base)) return;
        if (!pruning_violations(g, base).empty()) return;
      }
      if (!seen.insert(g)) return;
      if (critically_exist_verdict(g, mins)) out.insert(g);
    };
    auto grow = [&](auto&& self, const Graph& g, Word from) -> void {
      consider(g);
      if (g.order() >= max_n) return;
      for (Word m = from; m <= top; ++m) self(self, g.with_vertex(VertexSet(m)), m);
    };
    grow(grow, h, 1);
  }
  return out;
}

}  // namespace contracta
