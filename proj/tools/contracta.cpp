#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "contracta/catalog.hpp"
#include "contracta/certify.hpp"
#include "contracta/critical.hpp"
#include "contracta/error.hpp"
#include "contracta/family.hpp"
#include "contracta/graph.hpp"
#include "contracta/io.hpp"
#include "contracta/iso.hpp"
#include "contracta/linegraph.hpp"
#include "contracta/splitting.hpp"
#include "contracta/verify.hpp"

namespace {

using namespace contracta;

std::optional<Graph> parse_parametric(const std::string& tok) {
  if (tok.size() < 2 || tok.size() > 8) return std::nullopt;
  const char kind = tok[0];
  if (kind != 'P' && kind != 'C' && kind != 'S' && kind != 'K') return std::nullopt;
  const std::string rest = tok.substr(1);
  const auto digits = [](const std::string& s) {
    return !s.empty() && s.size() <= 3 &&
           std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if (const size_t x = rest.find('x'); kind == 'K' && x != std::string::npos) {
    const std::string a = rest.substr(0, x), b = rest.substr(x + 1);
    if (!digits(a) || !digits(b)) return std::nullopt;
    return catalog::complete_bipartite(std::stoi(a), std::stoi(b));
  }
  if (!digits(rest)) return std::nullopt;
  const int n = std::stoi(rest);
  switch (kind) {
    case 'P': return catalog::path(n);
    case 'C': return catalog::cycle(n);
    case 'S': return catalog::star(n);
    default: return catalog::complete(n);
  }
}

// A graph argument is, in order of precedence: a catalog id, a parametric id
// (P<n>, C<n>, S<k>, K<n>, K<a>x<b>), a file holding an edge list or a
// graph6 line, or a literal graph6 string.
Graph resolve_graph(const std::string& tok) {
  try {
    return catalog::get(tok).graph;
  } catch (const UnknownId&) {
  }
  if (std::optional<Graph> g = parse_parametric(tok)) return *g;
  std::error_code ec;
  if (std::filesystem::is_regular_file(tok, ec)) {
    std::ifstream in(tok);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    try {
      return parse_edgelist(text);
    } catch (const MalformedEdgeList& el) {
      try {
        return parse_graph6(text);
      } catch (const MalformedGraph6& g6) {
        throw UnknownId("cannot parse file '" + tok + "' as an edge list (" +
                        el.what() + ") or graph6 (" + g6.what() + ")");
      }
    }
  }
  try {
    return parse_graph6(tok);
  } catch (const MalformedGraph6& e) {
    throw UnknownId("cannot interpret '" + tok +
                    "' as a catalog id, parametric id, file, or graph6 string (" +
                    std::string(e.what()) + ")");
  }
}

struct FamilySpec {
  GraphFamily fam;
  std::vector<std::pair<std::string, Graph>> tokens;
};

// Family tokens are graph arguments plus the aliases "beineke" /
// "line-forbidden" (L1..L9) and "line-split" (L14..L34).
FamilySpec resolve_family(const std::vector<std::string>& toks) {
  FamilySpec spec;
  const auto push_range = [&spec](int lo, int hi) {
    for (int i = lo; i <= hi; ++i) {
      const std::string id = "L" + std::to_string(i);
      spec.tokens.emplace_back(id, catalog::get(id).graph);
    }
  };
  for (const std::string& tok : toks) {
    if (tok == "beineke" || tok == "line-forbidden")
      push_range(1, 9);
    else if (tok == "line-split")
      push_range(14, 34);
    else
      spec.tokens.emplace_back(tok, resolve_graph(tok));
  }
  for (const auto& [tok, g] : spec.tokens) spec.fam.insert(g);
  if (spec.fam.empty()) throw UnknownId("family is empty");
  return spec;
}

std::string graph_name(const Graph& g) {
  const std::string id = catalog::id_of_isomorphic(g);
  return id.empty() ? emit_graph6(g) : id;
}

std::string member_name(const FamilySpec& spec, int index) {
  for (const auto& [tok, g] : spec.tokens)
    if (are_isomorphic(g, spec.fam[index])) return tok;
  return graph_name(spec.fam[index]);
}

std::string vertices_str(const VertexSet& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void print_family(const GraphFamily& fam) {
  for (const Graph& g : fam) std::cout << emit_graph6(g) << "\n";
}

void print_graph(const Graph& g, const std::string& format) {
  if (format == "edgelist")
    std::cout << emit_edgelist(g);
  else if (format == "dot")
    std::cout << emit_dot(g);
  else
    std::cout << emit_graph6(g) << "\n";
}

std::string beineke_witness_str(const Graph& g, const BeinekeResult& b) {
  std::string s = b.witness_id;
  if (b.witness && b.witness->size() == g.order()) s += " itself";
  return s;
}

int run_verify(const std::string& section, int sweep) {
  VerifyOptions opt;
  opt.sweep_order = sweep;
  VerifyReport rep;
  if (section == "splitting")
    rep = verify_splitting_section(opt);
  else if (section == "claw")
    rep = verify_claw_section(opt);
  else if (section == "critical")
    rep = verify_critical_section(opt);
  else if (section == "line")
    rep = verify_line_section(opt);
  else
    rep = verify_all(opt);
  int passed = 0;
  for (const CheckResult& c : rep.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.detail << "\n";
    passed += c.pass ? 1 : 0;
  }
  std::cout << "verified " << passed << "/" << rep.checks.size() << " checks\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph contractions, splittings, and contraction-stability certificates"};
  app.require_subcommand(1);

  std::string g_arg, format = "graph6", method = "both", section = "all";
  std::string dump_id, list_prefix;
  std::vector<std::string> family_tokens;
  int u = 0, v = 0, vertex = -1, max_n = 7, enum_n = 1, sweep = 7;
  bool free_split = false, no_isolated = false, no_prune = false;

  CLI::App* c_contract = app.add_subcommand("contract", "Contract the edge uv of a graph");
  c_contract->add_option("graph", g_arg, "graph argument")->required();
  c_contract->add_option("u", u, "edge endpoint")->required();
  c_contract->add_option("v", v, "edge endpoint")->required();
  c_contract->add_option("--format", format, "graph6|edgelist|dot")
      ->check(CLI::IsMember({"graph6", "edgelist", "dot"}));

  CLI::App* c_free = app.add_subcommand("check-free", "Test induced-subgraph freeness");
  c_free->add_option("graph", g_arg, "graph argument")->required();
  c_free->add_option("--family", family_tokens, "family members (comma separated)")
      ->required()
      ->delimiter(',');

  CLI::App* c_split = app.add_subcommand("splitting", "Enumerate vertex splittings");
  c_split->add_option("graph", g_arg, "graph argument");
  c_split->add_option("--vertex", vertex, "split only this vertex");
  c_split->add_flag("--free-split", free_split, "keep only family-free splittings");
  c_split->add_option("--family", family_tokens, "family members (comma separated)")
      ->delimiter(',');

  CLI::App* c_crit = app.add_subcommand("critical", "Critically family-exist graphs");
  c_crit->require_subcommand(1);
  CLI::App* c_crit_check = c_crit->add_subcommand("check", "Test one graph");
  c_crit_check->add_option("graph", g_arg, "graph argument")->required();
  c_crit_check->add_option("--family", family_tokens, "family members (comma separated)")
      ->required()
      ->delimiter(',');
  CLI::App* c_crit_enum = c_crit->add_subcommand("enum", "Enumerate up to a given order");
  c_crit_enum->add_option("--family", family_tokens, "family members (comma separated)")
      ->required()
      ->delimiter(',');
  c_crit_enum->add_option("--max-n", max_n, "largest order")->required();
  c_crit_enum->add_flag("--no-prune", no_prune, "disable the attachment pruning rules");

  CLI::App* c_certify = app.add_subcommand("certify", "Contraction-stability certificate");
  c_certify->add_option("graph", g_arg, "graph argument")->required();
  c_certify->add_option("--family", family_tokens, "family members (comma separated)")
      ->required()
      ->delimiter(',');

  CLI::App* c_line = app.add_subcommand("line", "Line-graph recognition");
  c_line->add_option("graph", g_arg, "graph argument")->required();
  c_line->add_option("--method", method, "krausz|beineke|both")
      ->check(CLI::IsMember({"krausz", "beineke", "both"}));

  CLI::App* c_enum = app.add_subcommand("enumerate", "Graphs of a given order, one per class");
  c_enum->add_option("--n", enum_n, "order")->required();
  c_enum->add_flag("--no-isolated", no_isolated, "skip graphs with isolated vertices");

  CLI::App* c_catalog = app.add_subcommand("catalog", "Built-in graph catalog");
  CLI::App* c_cat_list = c_catalog->add_subcommand("list", "List entries");
  c_cat_list->add_option("prefix", list_prefix, "id prefix filter");
  CLI::App* c_cat_dump = c_catalog->add_subcommand("dump", "Print one entry");
  c_cat_dump->add_option("id", dump_id, "catalog id")->required();
  c_cat_dump->add_option("--format", format, "graph6|edgelist|dot")
      ->check(CLI::IsMember({"graph6", "edgelist", "dot"}));

  CLI::App* c_verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
  c_verify->add_option("--section", section, "splitting|claw|critical|line|all")
      ->check(CLI::IsMember({"splitting", "claw", "critical", "line", "all"}));
  c_verify->add_option("--sweep-n", sweep, "exhaustive sweep order (3..8)")
      ->check(CLI::Range(3, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_contract->parsed()) {
      const Graph g = resolve_graph(g_arg);
      print_graph(g.contract(Edge(u, v)), format);
    } else if (c_free->parsed()) {
      const Graph g = resolve_graph(g_arg);
      const FamilySpec spec = resolve_family(family_tokens);
      if (const std::optional<ExistWitness> w = witness_exist(g, spec.fam)) {
        std::cout << "exist (member " << member_name(spec, w->member) << " at "
                  << vertices_str(w->vertices) << ")\n";
      } else {
        std::cout << "free\n";
      }
    } else if (c_split->parsed()) {
      if (g_arg.empty()) {
        if (!free_split || family_tokens.empty())
          throw UnknownId("a graph argument is required unless --free-split --family is given");
        print_family(free_split_set(resolve_family(family_tokens).fam));
      } else {
        const Graph g = resolve_graph(g_arg);
        GraphFamily out = vertex >= 0 ? splittings_of_vertex(g, vertex) : splittings(g);
        if (free_split) {
          const GraphFamily fam = family_tokens.empty()
                                      ? GraphFamily(std::vector<Graph>{g})
                                      : resolve_family(family_tokens).fam;
          GraphFamily kept;
          for (const Graph& s : out)
            if (is_free(s, fam)) kept.insert(s);
          out = kept;
        }
        print_family(out);
      }
    } else if (c_crit_check->parsed()) {
      const Graph g = resolve_graph(g_arg);
      const CriticalReport r = is_critically_exist(g, resolve_family(family_tokens).fam);
      if (r.verdict)
        std::cout << "critically exist: yes\nwitnesses: " << r.witnesses.size() << "\n";
      else if (!r.exist)
        std::cout << "critically exist: no (family not present)\n";
      else
        std::cout << "critically exist: no (contracting " << r.counterexample->u << " "
                  << r.counterexample->v << " keeps the family present)\n";
    } else if (c_crit_enum->parsed()) {
      print_family(enumerate_critical(resolve_family(family_tokens).fam, max_n, !no_prune));
    } else if (c_certify->parsed()) {
      const Graph g = resolve_graph(g_arg);
      const FamilySpec spec = resolve_family(family_tokens);
      const CertifyVerdict verdict = certify(g, spec.fam);
      if (verdict.reason == CertifyReason::FsWitness) {
        const GraphFamily& fs = cached_free_split_set(spec.fam);
        std::cout << "not applicable: FS-witness " << graph_name(fs[verdict.fs_witness->member])
                  << "\n";
      } else if (verdict.reason == CertifyReason::CriticalIsomorphism) {
        std::cout << "not applicable: critically exist";
        if (!verdict.critical_id.empty()) std::cout << " (" << verdict.critical_id << ")";
        std::cout << "\n";
      } else {
        std::cout << "applicable: freeness is contraction-stable\n";
      }
      std::cout << "free: " << (verdict.g_is_free ? "yes" : "no") << "\n";
      std::cout << "all contractions free: " << (verdict.all_contractions_free ? "yes" : "no")
                << "\n";
    } else if (c_line->parsed()) {
      const Graph g = resolve_graph(g_arg);
      if (method == "beineke") {
        const BeinekeResult b = is_line_beineke(g);
        if (b.line)
          std::cout << "line (Beineke: no witness)\n";
        else
          std::cout << "non-line (Beineke witness: " << beineke_witness_str(g, b) << ")\n"
                    << "witness vertices: " << vertices_str(*b.witness) << "\n";
      } else if (method == "krausz") {
        const KrauszResult k = is_line_krausz(g);
        if (k.line) {
          std::cout << "line (Krausz: " << k.partition->cliques.size() << " cliques)\n";
          for (const VertexSet& c : k.partition->cliques)
            std::cout << "clique: " << vertices_str(c) << "\n";
        } else {
          std::cout << "non-line (Krausz: no partition)\n";
        }
      } else {
        const BeinekeResult b = is_line_beineke(g);
        const KrauszResult k = is_line_krausz(g);
        if (b.line) {
          std::cout << "line (Beineke: no witness; Krausz: " << k.partition->cliques.size()
                    << " cliques)\n";
          for (const VertexSet& c : k.partition->cliques)
            std::cout << "clique: " << vertices_str(c) << "\n";
        } else {
          std::cout << "non-line (Beineke witness: " << beineke_witness_str(g, b)
                    << "; Krausz: no partition)\n"
                    << "witness vertices: " << vertices_str(*b.witness) << "\n";
        }
      }
    } else if (c_enum->parsed()) {
      enumerate_graphs(enum_n, no_isolated,
                       [](const Graph& g) { std::cout << emit_graph6(g) << "\n"; });
    } else if (c_catalog->parsed()) {
      if (c_cat_dump->parsed()) {
        const catalog::NamedGraph& e = catalog::get(dump_id);
        std::cout << "id: " << e.id << "\n"
                  << "source: " << e.source << "\n"
                  << "graph6: " << emit_graph6(e.graph) << "\n";
        if (format == "dot")
          std::cout << emit_dot(e.graph);
        else if (format != "graph6")
          std::cout << emit_edgelist(e.graph);
      } else {
        for (const catalog::NamedGraph* e : catalog::all(list_prefix))
          std::cout << e->id << "\t" << e->graph.order() << " vertices, " << e->graph.size()
                    << " edges\t" << e->source << "\n";
      }
    } else if (c_verify->parsed()) {
      return run_verify(section, sweep);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
