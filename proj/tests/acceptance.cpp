// Acceptance gate: end-to-end checks of the classification results at desk
// scale. Each criterion prints exactly one PASS/FAIL line; the exit status is
// the number of failures. Heavier sweeps parallelize across CONTRACTA_THREADS.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "contracta/catalog.hpp"
#include "contracta/critical.hpp"
#include "contracta/family.hpp"
#include "contracta/graph.hpp"
#include "contracta/io.hpp"
#include "contracta/iso.hpp"
#include "contracta/linegraph.hpp"
#include "contracta/parallel.hpp"
#include "contracta/splitting.hpp"

using namespace contracta;

namespace {

int failures = 0;

void report(const char* id, bool pass, double secs, const std::string& detail) {
  std::printf("%s %s (%.2fs): %s\n", pass ? "PASS" : "FAIL", id, secs, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(const char* id, Fn&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, pass, secs, detail);
}

GraphFamily ids_family(std::initializer_list<const char*> ids) {
  GraphFamily fam;
  for (const char* id : ids) fam.insert(catalog::get(id).graph);
  return fam;
}

std::vector<Graph> graphs_upto(int k, bool no_isolated) {
  std::vector<Graph> out;
  for (int n = 1; n <= k; ++n)
    for (Graph& g : enumerate_graphs(n, no_isolated)) out.push_back(std::move(g));
  return out;
}

bool contractions_all_free(const Graph& g, const GraphFamily& fam) {
  for (const Edge& e : g.edges())
    if (!is_free(g.contract(e), fam)) return false;
  return true;
}

GraphFamily single(const Graph& g) { return GraphFamily(std::vector<Graph>{g}); }

}  // namespace

int main() {
  const GraphFamily claw_fam = single(catalog::get("claw").graph);
  const GraphFamily bull_fam = single(catalog::get("bull").graph);
  const GraphFamily ce = ids_family({"CE1", "CE2", "CE3", "CE4", "CE5", "CE6"});
  const GraphFamily& beineke = catalog::line_forbidden_family();
  const GraphFamily& lsplit = catalog::line_split_family();

  criterion("claw-splittings-catalog", [&](std::string& detail) {
    const GraphFamily got = splittings(catalog::get("claw").graph);
    const GraphFamily want = ids_family({"CS1", "CS2", "CS3", "CS4", "CS5", "CS6"});
    detail = std::to_string(got.size()) + " splitting classes of the claw, expected CS1..CS6";
    return got == want;
  });

  criterion("claw-free-split-set", [&](std::string& detail) {
    const GraphFamily fs = free_split_set(claw_fam);
    detail = "fs({claw}) has " + std::to_string(fs.size()) + " member(s), expected the bull";
    return fs.size() == 1 && fs.contains_isomorphic(catalog::get("bull").graph);
  });

  criterion("critically-claw-exist-classification", [&](std::string& detail) {
    const GraphFamily pruned = enumerate_critical(claw_fam, 7, true);
    const std::vector<Graph> gs = graphs_upto(7, true);
    std::vector<std::uint8_t> crit(gs.size(), 0);
    parallel_for(static_cast<int>(gs.size()),
                 [&](int i) { crit[i] = is_critically_exist(gs[i], claw_fam).verdict ? 1 : 0; });
    GraphFamily brute;
    for (size_t i = 0; i < gs.size(); ++i)
      if (crit[i]) brute.insert(gs[i]);
    detail = "pruned enumeration: " + std::to_string(pruned.size()) +
             " classes; exhaustive filter over " + std::to_string(gs.size()) +
             " graphs: " + std::to_string(brute.size()) + "; expected CE1..CE6";
    return pruned == ce && brute == ce;
  });

  criterion("claw-contraction-stability", [&](std::string& detail) {
    const std::vector<Graph> gs = graphs_upto(7, true);
    std::vector<std::uint8_t> good(gs.size(), 1);
    parallel_for(static_cast<int>(gs.size()), [&](int i) {
      const Graph& g = gs[i];
      if (!is_free(g, bull_fam) || ce.contains_isomorphic(g)) return;
      good[i] = (is_free(g, claw_fam) == contractions_all_free(g, claw_fam)) ? 1 : 0;
    });
    long bad = 0;
    std::string first;
    for (size_t i = 0; i < gs.size(); ++i)
      if (!good[i]) {
        if (bad == 0) first = emit_graph6(gs[i]);
        ++bad;
      }
    detail = bad == 0 ? std::to_string(gs.size()) + " graphs swept, no counterexamples"
                      : std::to_string(bad) + " counterexamples, first " + first;
    return bad == 0;
  });

  criterion("cycle-and-path-free-split-sets", [&](std::string& detail) {
    for (int n = 3; n <= 8; ++n) {
      const GraphFamily fs = free_split_set(single(catalog::cycle(n)));
      if (fs.size() != 1 || !fs.contains_isomorphic(catalog::cycle(n + 1))) {
        detail = "fs({C" + std::to_string(n) + "}) is not {C" + std::to_string(n + 1) + "}";
        return false;
      }
    }
    for (int n = 2; n <= 8; ++n)
      if (!free_split_set(single(catalog::path(n))).empty()) {
        detail = "fs({P" + std::to_string(n) + "}) is not empty";
        return false;
      }
    detail = "fs({C_n}) = {C_{n+1}} for n = 3..8 and fs({P_n}) empty for n = 2..8";
    return true;
  });

  criterion("splitting-completeness", [&](std::string& detail) {
    // Brute-force preimages: every graph that contracts onto h by some edge.
    std::map<CanonicalForm, GraphFamily> pre;
    for (int k = 2; k <= 6; ++k)
      for (const Graph& g : enumerate_graphs(k, false))
        for (const Edge& e : g.edges()) pre[canonical_form(g.contract(e))].insert(g);
    const std::vector<Graph> hs = graphs_upto(5, false);
    std::vector<GraphFamily> split_sets(hs.size());
    parallel_for(static_cast<int>(hs.size()), [&](int i) { split_sets[i] = splittings(hs[i]); });
    for (size_t i = 0; i < hs.size(); ++i)
      if (!(split_sets[i] == pre[canonical_form(hs[i])])) {
        detail = "splittings differ from contraction preimages at " + emit_graph6(hs[i]);
        return false;
      }
    detail = "splittings match contraction preimages for all " + std::to_string(hs.size()) +
             " base graphs of order <= 5";
    return true;
  });

  criterion("critical-edge-closed-form", [&](std::string& detail) {
    const std::vector<Graph> gs = graphs_upto(6, false);
    const std::vector<Graph> hs = {catalog::get("claw").graph, catalog::cycle(3),
                                   catalog::path(3)};
    std::atomic<long> triples{0};
    std::vector<std::uint8_t> good(gs.size(), 1);
    parallel_for(static_cast<int>(gs.size()), [&](int i) {
      const Graph& g = gs[i];
      const std::vector<Edge> edges = g.edges();
      long local = 0;
      for (const Graph& h : hs)
        for (const VertexSet& s : all_induced(g, h)) {
          for (const Edge& e : edges) {
            ++local;
            if (is_critical_for(g, s, e, h) != is_critical_for_characterized(g, s, e, h)) {
              good[i] = 0;
              return;
            }
          }
        }
      triples += local;
    });
    for (size_t i = 0; i < gs.size(); ++i)
      if (!good[i]) {
        detail = "closed form disagrees on " + emit_graph6(gs[i]);
        return false;
      }
    detail = std::to_string(triples.load()) +
             " (graph, witness, edge) triples agree across all graphs of order <= 6";
    return true;
  });

  criterion("line-recognizer-agreement", [&](std::string& detail) {
    const std::vector<Graph> gs = graphs_upto(7, false);
    std::vector<std::uint8_t> good(gs.size(), 1);
    parallel_for(static_cast<int>(gs.size()), [&](int i) {
      const BeinekeResult b = is_line_beineke(gs[i]);
      const KrauszResult k = is_line_krausz(gs[i]);
      const bool ok = b.line == k.line && (!k.line || krausz_valid(gs[i], *k.partition));
      good[i] = ok ? 1 : 0;
    });
    for (size_t i = 0; i < gs.size(); ++i)
      if (!good[i]) {
        detail = "recognizers disagree on " + emit_graph6(gs[i]);
        return false;
      }
    for (int i = 1; i <= 9; ++i)
      if (is_line_krausz(catalog::get("L" + std::to_string(i)).graph).line) {
        detail = "forbidden graph L" + std::to_string(i) + " accepted";
        return false;
      }
    for (int i = 14; i <= 34; ++i) {
      const Graph& g = catalog::get("L" + std::to_string(i)).graph;
      const KrauszResult k = is_line_krausz(g);
      if (!k.line || !krausz_valid(g, *k.partition)) {
        detail = "line-split member L" + std::to_string(i) + " rejected";
        return false;
      }
    }
    detail = std::to_string(gs.size()) +
             " graphs agree between the forbidden-subgraph and partition recognizers";
    return true;
  });

  criterion("minimal-line-split-members", [&](std::string& detail) {
    const GraphFamily got = elm(lsplit);
    const GraphFamily want =
        ids_family({"L14", "L15", "L16", "L17", "L18", "L19", "L20", "L21"});
    detail = "elm of the line-split set has " + std::to_string(got.size()) +
             " members, expected L14..L21";
    return got == want;
  });

  criterion("critically-non-line-classification", [&](std::string& detail) {
    const GraphFamily critical12 = ids_family(
        {"L1", "L2", "L4", "L5", "L6", "L7", "L8", "L9", "L10", "L11", "L12", "L13"});
    for (int i = 1; i <= 13; ++i) {
      const Graph& g = catalog::get("L" + std::to_string(i)).graph;
      const CriticalReport r = is_critically_exist(g, beineke);
      if (r.verdict != (i != 3)) {
        detail = "wrong verdict at L" + std::to_string(i);
        return false;
      }
      if (i == 3 && (!r.counterexample ||
                     catalog::id_of_isomorphic(g.contract(*r.counterexample)) != "L2")) {
        detail = "the L3 exclusion witness is missing";
        return false;
      }
    }
    const std::vector<Graph> gs = graphs_upto(7, true);
    std::vector<std::uint8_t> crit(gs.size(), 0);
    parallel_for(static_cast<int>(gs.size()),
                 [&](int i) { crit[i] = is_critically_exist(gs[i], beineke).verdict ? 1 : 0; });
    GraphFamily found;
    for (size_t i = 0; i < gs.size(); ++i)
      if (crit[i]) found.insert(gs[i]);
    detail = "sweep to order 7 finds " + std::to_string(found.size()) +
             " critically non-line graphs, expected the twelve catalog members";
    return found == critical12;
  });

  criterion("per-pattern-line-split-members", [&](std::string& detail) {
    const std::vector<std::vector<const char*>> expected = {
        {"L14"},
        {"L15", "L16"},
        {"L22", "L23"},
        {"L24", "L25"},
        {"L17", "L26", "L27", "L28"},
        {"L18", "L19", "L33"},
        {"L29", "L30", "L31", "L32"},
        {"L20", "L21"},
        {"L34"}};
    for (int i = 1; i <= 9; ++i) {
      GraphFamily line_members;
      for (const Graph& g : free_split_set(single(catalog::get("L" + std::to_string(i)).graph)))
        if (is_line_beineke(g).line) line_members.insert(g);
      GraphFamily want;
      for (const char* id : expected[i - 1]) want.insert(catalog::get(id).graph);
      if (!(line_members == want)) {
        detail = "line members of fs({L" + std::to_string(i) + "}) differ from the catalog";
        return false;
      }
    }
    detail = "line members of fs({L_i}) match the catalog lists for all nine patterns";
    return true;
  });

  criterion("encoding-and-canonical-integrity", [&](std::string& detail) {
    const std::vector<Graph> gs = graphs_upto(7, false);
    if (gs.size() != 1252) {
      detail = "expected 1252 graphs of order <= 7, enumerated " + std::to_string(gs.size());
      return false;
    }
    if (graphs_upto(7, true).size() != 1043) {
      detail = "expected 1043 isolated-free graphs of order <= 7";
      return false;
    }
    for (const Graph& g : gs)
      if (!(parse_graph6(emit_graph6(g)) == g)) {
        detail = "graph6 round trip broke on " + emit_graph6(g);
        return false;
      }
    // Labeled brute force reproduces the unlabeled counts.
    const std::vector<size_t> counts = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
      std::set<CanonicalForm> forms;
      const int pairs = n * (n - 1) / 2;
      for (long mask = 0; mask < (1L << pairs); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int j = 1; j < n; ++j)
          for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
        forms.insert(canonical_form(Graph(n, edges)));
      }
      if (forms.size() != counts[n - 1] || enumerate_graphs(n).size() != counts[n - 1]) {
        detail = "class count mismatch at order " + std::to_string(n);
        return false;
      }
    }
    // Canonical forms are invariant under relabeling.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, gs.size() - 1);
    std::vector<Graph> sample;
    std::vector<std::vector<std::vector<int>>> perms;
    for (int s = 0; s < 200; ++s) {
      const Graph& g = gs[pick(rng)];
      sample.push_back(g);
      std::vector<std::vector<int>> ps;
      std::vector<int> pos(g.order());
      for (int v = 0; v < g.order(); ++v) pos[v] = v;
      for (int t = 0; t < 100; ++t) {
        std::shuffle(pos.begin(), pos.end(), rng);
        ps.push_back(pos);
      }
      perms.push_back(std::move(ps));
    }
    std::vector<std::uint8_t> good(sample.size(), 1);
    parallel_for(static_cast<int>(sample.size()), [&](int i) {
      const CanonicalForm base = canonical_form(sample[i]);
      for (const std::vector<int>& pos : perms[i])
        if (!(canonical_form(sample[i].relabeled(pos)) == base)) {
          good[i] = 0;
          return;
        }
    });
    for (std::uint8_t g : good)
      if (!g) {
        detail = "canonical form changed under relabeling";
        return false;
      }
    detail = "1252 round trips, labeled recounts to order 6, and 20000 relabeling checks";
    return true;
  });

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures;
}
