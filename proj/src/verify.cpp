#include "contracta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
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

namespace contracta {

bool VerifyReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void add(VerifyReport& r, std::string id, bool pass, std::string detail) {
  r.checks.push_back({std::move(id), pass, std::move(detail)});
}

int clamp_sweep(const VerifyOptions& opt) { return std::clamp(opt.sweep_order, 3, 8); }

GraphFamily ids_family(std::initializer_list<const char*> ids) {
  GraphFamily fam;
  for (const char* id : ids) fam.insert(catalog::get(id).graph);
  return fam;
}

std::string family_ids(const GraphFamily& fam) {
  std::string out;
  for (const Graph& g : fam) {
    std::string id = catalog::id_of_isomorphic(g);
    if (id.empty()) id = emit_graph6(g);
    if (!out.empty()) out += ' ';
    out += id;
  }
  return out.empty() ? "(empty)" : out;
}

std::vector<Graph> graphs_upto(int k, bool no_isolated) {
  std::vector<Graph> out;
  for (int n = 1; n <= k; ++n)
    for (Graph& g : enumerate_graphs(n, no_isolated)) out.push_back(std::move(g));
  return out;
}

// Indices of graphs failing the (pure) predicate.
std::vector<int> sweep_failures(const std::vector<Graph>& gs,
                                const std::function<bool(const Graph&)>& ok) {
  std::vector<std::uint8_t> good(gs.size(), 1);
  parallel_for(static_cast<int>(gs.size()), [&](int i) { good[i] = ok(gs[i]) ? 1 : 0; });
  std::vector<int> bad;
  for (size_t i = 0; i < gs.size(); ++i)
    if (!good[i]) bad.push_back(static_cast<int>(i));
  return bad;
}

std::string sweep_detail(const std::vector<Graph>& gs, const std::vector<int>& bad,
                         const char* what) {
  if (bad.empty()) return std::to_string(gs.size()) + " " + what + ", no counterexamples";
  return std::to_string(bad.size()) + " counterexamples, first " + emit_graph6(gs[bad[0]]);
}

std::string count_detail(long n, const char* what) { return std::to_string(n) + " " + what; }

// The members a sweep of bounded order can possibly find.
GraphFamily upto_order(const GraphFamily& fam, int k) {
  GraphFamily out;
  for (const Graph& g : fam)
    if (g.order() <= k) out.insert(g);
  return out;
}

bool contractions_all_free(const Graph& g, const GraphFamily& fam) {
  for (const Edge& e : g.edges())
    if (!is_free(g.contract(e), fam)) return false;
  return true;
}

std::vector<std::uint8_t> critical_flags(const std::vector<Graph>& gs, const GraphFamily& fam) {
  std::vector<std::uint8_t> crit(gs.size(), 0);
  parallel_for(static_cast<int>(gs.size()),
               [&](int i) { crit[i] = is_critically_exist(gs[i], fam).verdict ? 1 : 0; });
  return crit;
}

}  // namespace

VerifyReport verify_splitting_section(const VerifyOptions& opt) {
  (void)opt;
  VerifyReport rep;

  // Contracting the added edge uw of any splitting recovers the base graph.
  {
    bool ok = true;
    long checked = 0;
    std::string bad;
    for (const char* id : {"claw", "bull", "CS3", "CE3", "L2", "L9"}) {
      const Graph& h = catalog::get(id).graph;
      const int n = h.order();
      for (int v = 0; v < n && ok; ++v) {
        const std::vector<int> nbr = h.neighborhood(v).to_vector();
        long total = 1;
        for (size_t i = 0; i < nbr.size(); ++i) total *= 3;
        for (long code = 0; code < total && ok; ++code) {
          VertexSet u, w;
          long c = code;
          for (int x : nbr) {
            if (c % 3 != 1) u.add(x);
            if (c % 3 != 0) w.add(x);
            c /= 3;
          }
          const Graph split = apply_split({h, v, u, w});
          if (!are_isomorphic(split.contract(Edge(n - 1, n)), h)) {
            ok = false;
            bad = id;
          }
          ++checked;
        }
      }
    }
    add(rep, "split-roundtrip", ok,
        ok ? count_detail(checked, "covers recontract to their base graph") : "failed for " + bad);
  }

  // All covers of one C3 vertex, up to isomorphism.
  {
    const Graph c3 = catalog::cycle(3);
    const GraphFamily fam = splittings_of_vertex(c3, 0);
    const Graph paw(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    const Graph diamond(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}});
    const bool ok = fam.size() == 4 && fam.contains_isomorphic(catalog::cycle(4)) &&
                    fam.contains_isomorphic(paw) && fam.contains_isomorphic(diamond) &&
                    fam.contains_isomorphic(catalog::complete(4));
    add(rep, "split-vertex-covers", ok,
        "splitting(C3, v) has " + std::to_string(fam.size()) +
            " classes: C4, paw, diamond, K4 expected");
  }

  // A full side (U = N(v)) keeps the base as an induced subgraph.
  {
    std::vector<Graph> hs = graphs_upto(4, true);
    hs.push_back(catalog::get("claw").graph);
    hs.push_back(catalog::get("bull").graph);
    bool ok = true;
    long checked = 0;
    for (const Graph& h : hs) {
      const GraphFamily self(std::vector<Graph>{h});
      for (int v = 0; v < h.order() && ok; ++v) {
        const VertexSet nv = h.neighborhood(v);
        for (VertexSet w : {VertexSet(), nv}) {
          if (is_free(apply_split({h, v, nv, w}), self)) ok = false;
          ++checked;
        }
      }
      if (!ok) break;
    }
    add(rep, "split-full-side-not-free", ok,
        count_detail(checked, "full-side covers all keep the base present"));
  }

  // Splitting a degree-1 vertex never frees the base.
  {
    bool ok = true;
    long checked = 0;
    for (const Graph& h : graphs_upto(5, true)) {
      const GraphFamily self(std::vector<Graph>{h});
      for (int v = 0; v < h.order(); ++v) {
        if (h.degree(v) != 1) continue;
        for (const Graph& s : splittings_of_vertex(h, v))
          if (is_free(s, self)) ok = false;
        ++checked;
      }
    }
    add(rep, "split-degree-one-not-free", ok,
        count_detail(checked, "degree-1 vertices split without freeing the base"));
  }

  {
    bool ok = true;
    for (int n = 2; n <= 8 && ok; ++n)
      ok = free_split_set(GraphFamily(std::vector<Graph>{catalog::path(n)})).empty();
    add(rep, "split-path-free-empty", ok, "fs({P_n}) empty for n = 2..8");
  }

  {
    bool ok = true;
    for (int n = 3; n <= 8 && ok; ++n) {
      const GraphFamily fs =
          free_split_set(GraphFamily(std::vector<Graph>{catalog::cycle(n)}));
      ok = fs.size() == 1 && fs.contains_isomorphic(catalog::cycle(n + 1));
    }
    add(rep, "split-cycle-free-successor", ok, "fs({C_n}) = {C_{n+1}} for n = 3..8");
  }

  // splittings(h) equals the brute-force contraction preimages, every base
  // graph of order <= 5; and the overlapping covers are what make it so.
  {
    std::map<CanonicalForm, GraphFamily> pre;
    for (int k = 2; k <= 6; ++k)
      for (const Graph& g : enumerate_graphs(k, false))
        for (const Edge& e : g.edges()) pre[canonical_form(g.contract(e))].insert(g);

    const std::vector<Graph> hs = graphs_upto(5, false);
    std::vector<GraphFamily> split_sets(hs.size());
    parallel_for(static_cast<int>(hs.size()),
                 [&](int i) { split_sets[i] = splittings(hs[i]); });
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < hs.size(); ++i) {
      if (!(split_sets[i] == pre[canonical_form(hs[i])])) {
        ok = false;
        bad = emit_graph6(hs[i]);
        break;
      }
    }
    add(rep, "split-completeness-n5", ok,
        ok ? count_detail(static_cast<long>(hs.size()),
                          "base graphs match their contraction preimages")
           : "mismatch at base " + bad);

    const Graph c3 = catalog::cycle(3);
    const GraphFamily& brute = pre[canonical_form(c3)];
    const GraphFamily dis = splittings(c3, CoverMode::Disjoint);
    add(rep, "split-cover-semantics", splittings(c3) == brute && dis.size() < brute.size(),
        "overlapping covers reproduce all " + std::to_string(brute.size()) +
            " C3 preimages; disjoint covers reach only " + std::to_string(dis.size()));
  }

  // Orbit-reduced and full expansions agree on every catalog graph.
  {
    const std::vector<const catalog::NamedGraph*> entries = catalog::all();
    std::vector<std::uint8_t> good(entries.size(), 1);
    parallel_for(static_cast<int>(entries.size()), [&](int i) {
      const Graph& h = entries[i]->graph;
      good[i] = splittings(h) == splittings(h, CoverMode::Overlapping, false) ? 1 : 0;
    });
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < entries.size(); ++i)
      if (!good[i]) {
        ok = false;
        bad = entries[i]->id;
        break;
      }
    add(rep, "split-orbit-reduction", ok,
        ok ? count_detail(static_cast<long>(entries.size()),
                          "catalog graphs agree with the unreduced expansion")
           : "mismatch at " + bad);
  }
  return rep;
}

VerifyReport verify_claw_section(const VerifyOptions& opt) {
  VerifyReport rep;
  const int sweep = clamp_sweep(opt);
  const Graph claw = catalog::get("claw").graph;
  const GraphFamily claw_fam(std::vector<Graph>{claw});
  const GraphFamily bull_fam(std::vector<Graph>{catalog::get("bull").graph});
  const GraphFamily cs = ids_family({"CS1", "CS2", "CS3", "CS4", "CS5", "CS6"});
  const GraphFamily ce = ids_family({"CE1", "CE2", "CE3", "CE4", "CE5", "CE6"});

  {
    const GraphFamily got = splittings(claw);
    add(rep, "claw-split-set", got == cs, "splitting(claw) = " + family_ids(got));
  }
  {
    const GraphFamily fs = free_split_set(claw_fam);
    add(rep, "claw-free-split-bull",
        fs.size() == 1 && fs.contains_isomorphic(catalog::get("bull").graph),
        "fs({claw}) = " + family_ids(fs));
  }
  {
    bool ok = true;
    for (const Graph& g : ce) ok = ok && is_critically_exist(g, claw_fam).verdict;
    add(rep, "critically-claw-exist-catalog", ok,
        "all six catalog graphs are critically claw-exist");
  }
  {
    const GraphFamily pruned = enumerate_critical(claw_fam, 7, true);
    const GraphFamily unpruned = enumerate_critical(claw_fam, 7, false);
    add(rep, "critically-claw-exist-enum", pruned == ce && unpruned == ce,
        "pruned and unpruned enumerations to order 7 give " + family_ids(pruned));
  }
  {
    const std::vector<Graph> gs = graphs_upto(sweep, true);
    const std::vector<std::uint8_t> crit = critical_flags(gs, claw_fam);
    GraphFamily found;
    for (size_t i = 0; i < gs.size(); ++i)
      if (crit[i]) found.insert(gs[i]);
    add(rep, "critically-claw-exist-sweep", found == upto_order(ce, sweep),
        "exhaustive filter to order " + std::to_string(sweep) + " finds " + family_ids(found));
  }
  {
    const std::vector<Graph> gs = graphs_upto(sweep, true);
    const std::vector<int> bad = sweep_failures(gs, [&](const Graph& g) {
      if (!is_free(g, bull_fam) || ce.contains_isomorphic(g)) return true;
      return is_free(g, claw_fam) == contractions_all_free(g, claw_fam);
    });
    add(rep, "claw-contraction-stability", bad.empty(), sweep_detail(gs, bad, "graphs swept"));
  }
  return rep;
}

VerifyReport verify_critical_section(const VerifyOptions& opt) {
  VerifyReport rep;
  const int sweep = clamp_sweep(opt);
  const Graph claw = catalog::get("claw").graph;
  const Graph c3 = catalog::cycle(3);

  // The direct contraction test and its closed form agree everywhere.
  {
    const std::vector<Graph> gs = graphs_upto(std::min(sweep, 6), false);
    const std::vector<Graph> hs = {claw, c3, catalog::path(3)};
    std::atomic<long> triples{0};
    const std::vector<int> bad = sweep_failures(gs, [&](const Graph& g) {
      const std::vector<Edge> edges = g.edges();
      for (const Graph& h : hs) {
        if (h.order() > g.order()) continue;
        for (VertexSet s : all_induced(g, h))
          for (const Edge& e : edges) {
            if (is_critical_for(g, s, e, h) != is_critical_for_characterized(g, s, e, h))
              return false;
            ++triples;
          }
      }
      return true;
    });
    add(rep, "critical-edge-characterization", bad.empty(),
        bad.empty() ? count_detail(triples.load(), "(graph, witness, edge) triples agree")
                    : sweep_detail(gs, bad, "graphs"));
  }

  // |f(S)| drops by one exactly when both endpoints lie in S.
  {
    bool ok = true;
    long checked = 0;
    for (const Graph& g : graphs_upto(5, false)) {
      const std::vector<Edge> edges = g.edges();
      const Word all = g.vertices().bits();
      Word mask = all;
      while (true) {
        const VertexSet s(mask);
        for (const Edge& e : edges) {
          const int expect = s.size() - ((s.contains(e.u) && s.contains(e.v)) ? 1 : 0);
          if (f_map(g, s, e).size() != expect) ok = false;
          ++checked;
        }
        if (mask == 0) break;
        mask = (mask - 1) & all;
      }
    }
    add(rep, "critical-set-image-size", ok,
        count_detail(checked, "(set, edge) images sized correctly"));
  }

  // Every critically-exist graph passes both witness conditions, for three
  // families, over the whole sweep range.
  {
    std::vector<std::pair<const char*, GraphFamily>> fams;
    fams.emplace_back("claw", GraphFamily(std::vector<Graph>{claw}));
    fams.emplace_back("triangle", GraphFamily(std::vector<Graph>{c3}));
    fams.emplace_back("line-forbidden", catalog::line_forbidden_family());
    const std::vector<Graph> gs = graphs_upto(sweep, true);
    bool ok = true;
    long criticals = 0;
    for (const auto& [name, fam] : fams) {
      const std::vector<std::uint8_t> crit = critical_flags(gs, fam);
      for (size_t i = 0; i < gs.size(); ++i) {
        if (!crit[i]) continue;
        ++criticals;
        for (const WitnessConditions& wc : witness_conditions(gs[i], fam))
          if (!wc.independent_ok || !wc.corner_ok) ok = false;
      }
    }
    add(rep, "critical-witness-structure", ok,
        count_detail(criticals, "critical graphs, every witness passes both conditions"));
  }

  {
    const GraphFamily c3fam(std::vector<Graph>{c3});
    const GraphFamily enumd = enumerate_critical(c3fam, 6);
    bool ok = enumd.size() == 1 && enumd.contains_isomorphic(c3);
    GraphFamily found;
    for (const Graph& g : graphs_upto(std::min(sweep, 6), true))
      if (is_critically_exist(g, c3fam).verdict) found.insert(g);
    ok = ok && found.size() == 1 && found.contains_isomorphic(c3);
    add(rep, "triangle-critical-unique", ok, "enumeration and sweep both find only C3");
  }

  // A C_k-exist graph always has a contraction that is C_{k-1}-exist.
  {
    const std::vector<Graph> gs = graphs_upto(sweep, true);
    bool ok = true;
    for (int k = 4; k <= sweep && ok; ++k) {
      const GraphFamily ck(std::vector<Graph>{catalog::cycle(k)});
      const GraphFamily ck1(std::vector<Graph>{catalog::cycle(k - 1)});
      const std::vector<int> bad = sweep_failures(gs, [&](const Graph& g) {
        if (is_free(g, ck)) return true;
        for (const Edge& e : g.edges())
          if (!is_free(g.contract(e), ck1)) return true;
        return false;
      });
      if (!bad.empty()) ok = false;
    }
    add(rep, "cycle-contraction-chain", ok,
        "cycles C4..C" + std::to_string(sweep) + " against all graphs to order " +
            std::to_string(sweep));
  }
  return rep;
}

VerifyReport verify_line_section(const VerifyOptions& opt) {
  VerifyReport rep;
  const int sweep = clamp_sweep(opt);
  const GraphFamily& beineke = catalog::line_forbidden_family();
  const GraphFamily& lsplit = catalog::line_split_family();
  const GraphFamily lelm =
      ids_family({"L14", "L15", "L16", "L17", "L18", "L19", "L20", "L21"});
  const GraphFamily critical12 = ids_family(
      {"L1", "L2", "L4", "L5", "L6", "L7", "L8", "L9", "L10", "L11", "L12", "L13"});

  {
    bool ok = true;
    std::string bad;
    for (int i = 14; i <= 34 && ok; ++i) {
      const catalog::NamedGraph& e = catalog::get("L" + std::to_string(i));
      const KrauszResult k = is_line_krausz(e.graph);
      if (!is_line_beineke(e.graph).line || !k.line || !krausz_valid(e.graph, *k.partition)) {
        ok = false;
        bad = e.id;
      }
    }
    add(rep, "line-split-members-line", ok,
        ok ? "L14..L34 accepted by both recognizers with valid partitions" : "failed at " + bad);
  }
  {
    const GraphFamily got = elm(lsplit);
    add(rep, "line-split-elm", got == lelm, "elm({L14..L34}) = " + family_ids(got));
  }
  {
    const GraphFamily fs = free_split_set(beineke);
    add(rep, "line-free-split-set", fs == lsplit,
        "fs(line-forbidden) has " + std::to_string(fs.size()) + " classes, expected L14..L34");
  }
  {
    bool ok = true;
    std::string note;
    for (int i = 1; i <= 13; ++i) {
      const catalog::NamedGraph& e = catalog::get("L" + std::to_string(i));
      const CriticalReport r = is_critically_exist(e.graph, beineke);
      if (r.verdict != (i != 3)) {
        ok = false;
        note = "wrong verdict at " + e.id;
        break;
      }
      if (i == 3) {
        if (!r.counterexample ||
            catalog::id_of_isomorphic(e.graph.contract(*r.counterexample)) != "L2") {
          ok = false;
          note = "L3 exclusion witness missing";
          break;
        }
        note = "L3 excluded: contracting its surviving edge yields L2";
      }
    }
    add(rep, "critically-non-line-catalog", ok,
        ok ? "exactly {L1, L2, L4..L13} critical; " + note : note);
  }
  {
    const std::vector<Graph> gs = graphs_upto(sweep, true);
    const std::vector<std::uint8_t> crit = critical_flags(gs, beineke);
    GraphFamily found;
    for (size_t i = 0; i < gs.size(); ++i)
      if (crit[i]) found.insert(gs[i]);
    add(rep, "critically-non-line-sweep", found == upto_order(critical12, sweep),
        "sweep to order " + std::to_string(sweep) + " finds " +
            std::to_string(found.size()) + " critically non-line graphs");
  }
  {
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
      const GraphFamily fam(
          std::vector<Graph>{catalog::get("L" + std::to_string(i)).graph});
      GraphFamily line_members;
      for (const Graph& g : free_split_set(fam))
        if (is_line_beineke(g).line) line_members.insert(g);
      GraphFamily want;
      for (const char* id : expected[i - 1]) want.insert(catalog::get(id).graph);
      add(rep, "forbidden-L" + std::to_string(i) + "-split-line-members",
          line_members == want,
          "line members of fs({L" + std::to_string(i) + "}) = " + family_ids(line_members));
    }
  }
  {
    const std::vector<Graph> gs = graphs_upto(sweep, false);
    const std::vector<int> bad = sweep_failures(gs, [&](const Graph& g) {
      const BeinekeResult b = is_line_beineke(g);
      const KrauszResult k = is_line_krausz(g);
      if (b.line != k.line) return false;
      return !k.line || krausz_valid(g, *k.partition);
    });
    add(rep, "line-recognizer-agreement", bad.empty(), sweep_detail(gs, bad, "graphs compared"));
  }
  {
    const std::vector<Graph> gs = graphs_upto(sweep, true);
    const std::vector<int> bad = sweep_failures(gs, [&](const Graph& g) {
      if (!is_free(g, lelm) || critical12.contains_isomorphic(g)) return true;
      return is_free(g, beineke) == contractions_all_free(g, beineke);
    });
    add(rep, "line-contraction-stability", bad.empty(), sweep_detail(gs, bad, "graphs swept"));
  }
  return rep;
}

VerifyReport verify_all(const VerifyOptions& opt) {
  VerifyReport rep;
  for (const VerifyReport& section :
       {verify_splitting_section(opt), verify_claw_section(opt), verify_critical_section(opt),
        verify_line_section(opt)})
    for (const CheckResult& c : section.checks) rep.checks.push_back(c);
  return rep;
}

}  // namespace contracta
