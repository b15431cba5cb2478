#include "contracta/catalog.hpp"

#include <map>
#include <mutex>

#include "contracta/iso.hpp"

namespace contracta {
namespace catalog {

namespace {

struct Entry {
  const char* id;
  int n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degseq;  // ascending, recorded at transcription time
  const char* source;
};

// Edge lists keep the transcribed vertex numbering (declaration order of the
// drawings they were read from). Degree sequences are recorded independently
// and asserted at load, so a mistyped pair fails fast.
const std::vector<Entry>& raw_entries() {
  static const std::vector<Entry> entries = {
      {"claw", 4, {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1, 3}, "base"},
      {"bull", 5, {{0, 1}, {1, 3}, {3, 0}, {2, 1}, {3, 4}}, {1, 1, 2, 3, 3}, "base"},

      // Splittings of the claw.
      {"CS1", 5, {{3, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 0}}, {1, 2, 2, 3, 4}, "claw-split set"},
      {"CS2", 5, {{2, 4}, {4, 3}, {3, 2}, {2, 1}, {0, 2}}, {1, 1, 2, 2, 4}, "claw-split set"},
      {"CS3", 5, {{4, 2}, {2, 3}, {0, 2}, {2, 1}}, {1, 1, 1, 1, 4}, "claw-split set"},
      {"CS4", 5, {{2, 1}, {1, 0}, {0, 3}, {4, 0}}, {1, 1, 1, 2, 3}, "claw-split set"},
      {"CS5", 5, {{0, 1}, {1, 3}, {3, 0}, {2, 1}, {3, 4}}, {1, 1, 2, 3, 3}, "claw-split set"},
      {"CS6", 5, {{0, 1}, {1, 3}, {3, 0}, {3, 2}, {2, 1}, {3, 4}, {4, 1}}, {2, 2, 2, 4, 4}, "claw-split set"},

      // Critically claw-exist graphs.
      {"CE1", 4, {{1, 0}, {2, 0}, {3, 0}}, {1, 1, 1, 3}, "critically claw-exist set"},
      {"CE2", 5, {{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1}, {4, 1}}, {2, 2, 2, 3, 3}, "critically claw-exist set"},
      {"CE3",
       6,
       {{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2}, {5, 2}},
       {3, 3, 3, 3, 3, 3},
       "critically claw-exist set"},
      {"CE4", 5, {{1, 0}, {2, 0}, {3, 0}, {2, 4}, {4, 3}}, {1, 2, 2, 2, 3}, "critically claw-exist set"},
      {"CE5",
       6,
       {{1, 0}, {2, 0}, {3, 0}, {2, 4}, {4, 3}, {1, 5}, {5, 2}},
       {2, 2, 2, 2, 3, 3},
       "critically claw-exist set"},
      {"CE6",
       6,
       {{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1}, {4, 1}, {3, 5}, {5, 4}},
       {2, 2, 3, 3, 3, 3},
       "critically claw-exist set"},

      // Minimal non-line graphs.
      {"L1", 4, {{1, 0}, {0, 2}, {0, 3}}, {1, 1, 1, 3}, "line-forbidden set"},
      {"L2", 5, {{4, 0}, {0, 3}, {4, 1}, {1, 3}, {4, 2}, {2, 3}, {2, 1}}, {2, 3, 3, 3, 3}, "line-forbidden set"},
      {"L3",
       6,
       {{5, 1}, {1, 0}, {0, 4}, {5, 2}, {2, 4}, {5, 3}, {3, 4}, {3, 2}},
       {2, 2, 3, 3, 3, 3},
       "line-forbidden set"},
      {"L4",
       6,
       {{5, 1}, {0, 4}, {5, 2}, {2, 4}, {5, 3}, {3, 4}, {3, 2}},
       {1, 1, 3, 3, 3, 3},
       "line-forbidden set"},
      {"L5",
       6,
       {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 2}, {2, 4}, {3, 5}},
       {1, 3, 3, 3, 4, 4},
       "line-forbidden set"},
      {"L6",
       6,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}, {3, 4}, {4, 5}, {5, 2}, {2, 4}, {3, 5}},
       {3, 3, 3, 3, 5, 5},
       "line-forbidden set"},
      {"L7",
       6,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {5, 2}},
       {2, 2, 3, 3, 4, 4},
       "line-forbidden set"},
      {"L8",
       5,
       {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {3, 2}, {2, 4}, {4, 0}, {4, 1}},
       {3, 3, 4, 4, 4},
       "line-forbidden set"},
      {"L9",
       6,
       {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 0}, {0, 2}, {3, 0}, {0, 4}, {0, 5}},
       {3, 3, 3, 3, 3, 5},
       "line-forbidden set"},

      // Critically non-line graphs beyond the minimal ones.
      {"L10", 5, {{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1}, {4, 1}}, {2, 2, 2, 3, 3}, "critically non-line set"},
      {"L11",
       6,
       {{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2}, {5, 2}},
       {3, 3, 3, 3, 3, 3},
       "critically non-line set"},
      {"L12", 5, {{1, 0}, {2, 0}, {3, 0}, {2, 4}, {4, 3}}, {1, 2, 2, 2, 3}, "critically non-line set"},
      {"L13",
       6,
       {{1, 0}, {2, 0}, {3, 0}, {2, 4}, {4, 3}, {1, 5}, {5, 2}},
       {2, 2, 2, 2, 3, 3},
       "critically non-line set"},

      // Line graphs arising as splittings of L1..L9 (minimal ones first).
      {"L14", 5, {{1, 0}, {0, 2}, {2, 1}, {1, 3}, {4, 2}}, {1, 1, 2, 3, 3}, "minimal line-split set"},
      {"L15",
       6,
       {{3, 0}, {0, 2}, {2, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 2}, {5, 0}, {0, 4}},
       {2, 3, 3, 3, 3, 4},
       "minimal line-split set"},
      {"L16",
       6,
       {{0, 2}, {2, 1}, {1, 0}, {3, 5}, {5, 4}, {4, 3}, {0, 3}, {1, 4}, {2, 5}},
       {3, 3, 3, 3, 3, 3},
       "minimal line-split set"},
      {"L17",
       7,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 2}, {5, 6}, {6, 4}},
       {2, 3, 3, 3, 3, 4, 4},
       "minimal line-split set"},
      {"L18",
       7,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 6}, {6, 2}, {3, 6}, {6, 1}, {3, 4}, {4, 5}, {5, 2}, {2, 4}, {3, 5}},
       {3, 3, 3, 3, 4, 5, 5},
       "minimal line-split set"},
      {"L19",
       7,
       {{1, 0}, {0, 3}, {3, 6}, {6, 1}, {1, 3}, {0, 6}, {2, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 5}, {0, 4}, {4, 3}},
       {3, 3, 3, 3, 4, 4, 6},
       "minimal line-split set"},
      {"L20",
       6,
       {{3, 0}, {0, 1}, {1, 2}, {2, 3}, {0, 5}, {5, 1}, {2, 5}, {5, 3}, {3, 4}, {4, 0}, {5, 4}},
       {3, 3, 3, 4, 4, 5},
       "minimal line-split set"},
      {"L21",
       6,
       {{3, 0}, {0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 1}, {2, 4}, {4, 3}, {3, 5}, {5, 0}, {2, 5}, {5, 1}},
       {4, 4, 4, 4, 4, 4},
       "minimal line-split set"},

      // Remaining line graphs arising as splittings of L1..L9.
      {"L22",
       7,
       {{4, 0}, {0, 3}, {3, 1}, {1, 2}, {2, 4}, {4, 6}, {6, 5}, {5, 3}, {6, 0}, {0, 5}},
       {2, 2, 3, 3, 3, 3, 4},
       "non-minimal line-split set"},
      {"L23",
       7,
       {{0, 2}, {2, 1}, {1, 0}, {4, 6}, {6, 5}, {5, 4}, {0, 3}, {3, 4}, {1, 5}, {2, 6}},
       {2, 3, 3, 3, 3, 3, 3},
       "non-minimal line-split set"},
      {"L24",
       7,
       {{4, 0}, {0, 3}, {3, 1}, {2, 4}, {4, 6}, {6, 5}, {5, 3}, {6, 0}, {0, 5}},
       {1, 1, 3, 3, 3, 3, 4},
       "non-minimal line-split set"},
      {"L25",
       7,
       {{0, 2}, {2, 1}, {1, 0}, {3, 5}, {5, 4}, {4, 3}, {0, 3}, {1, 4}, {5, 6}},
       {1, 2, 3, 3, 3, 3, 3},
       "non-minimal line-split set"},
      {"L26",
       7,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 4}, {5, 6}},
       {1, 3, 3, 3, 3, 4, 5},
       "non-minimal line-split set"},
      {"L27",
       7,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 1}, {2, 4}, {4, 3}, {5, 6}, {2, 6}, {6, 3}},
       {1, 3, 3, 3, 4, 4, 4},
       "non-minimal line-split set"},
      {"L28",
       7,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 1}, {2, 4}, {4, 3}, {5, 6}, {2, 6}, {6, 3}, {6, 4}},
       {1, 3, 3, 4, 4, 4, 5},
       "non-minimal line-split set"},
      {"L29",
       7,
       {{4, 0}, {0, 3}, {3, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 6}, {6, 5}, {5, 3}, {6, 0}, {0, 5}},
       {2, 3, 3, 3, 3, 4, 4},
       "non-minimal line-split set"},
      {"L30",
       7,
       {{4, 0}, {0, 3}, {3, 1}, {5, 2}, {2, 6}, {1, 4}, {4, 6}, {6, 5}, {5, 3}, {6, 0}, {0, 5}},
       {2, 2, 3, 3, 4, 4, 4},
       "non-minimal line-split set"},
      {"L31",
       7,
       {{3, 4}, {4, 2}, {2, 3}, {3, 0}, {0, 1}, {1, 2}, {0, 6}, {6, 5}, {5, 1}, {2, 0}, {3, 1}, {0, 5}},
       {2, 2, 3, 4, 4, 4, 5},
       "non-minimal line-split set"},
      {"L32",
       7,
       {{1, 0}, {0, 4}, {4, 2}, {2, 0}, {0, 3}, {3, 1}, {1, 2}, {1, 5}, {5, 2}, {3, 6}, {6, 4}, {4, 3}},
       {2, 2, 4, 4, 4, 4, 4},
       "non-minimal line-split set"},
      {"L33",
       7,
       {{0, 1},
        {1, 2},
        {2, 3},
        {3, 4},
        {4, 0},
        {0, 2},
        {2, 4},
        {4, 1},
        {1, 3},
        {3, 0},
        {1, 6},
        {6, 5},
        {5, 4},
        {6, 0},
        {0, 5}},
       {3, 3, 4, 4, 5, 5, 6},
       "non-minimal line-split set"},
      {"L34",
       7,
       {{1, 0},
        {0, 2},
        {3, 0},
        {0, 4},
        {3, 1},
        {1, 2},
        {2, 4},
        {3, 5},
        {5, 1},
        {2, 5},
        {6, 1},
        {2, 6},
        {6, 4},
        {5, 6}},
       {3, 3, 4, 4, 4, 5, 5},
       "non-minimal line-split set"},
  };
  return entries;
}

struct Catalog {
  std::vector<NamedGraph> entries;
  std::map<std::string, int> by_id;
};

Graph build_entry(const Entry& e) {
  std::vector<Edge> edges;
  edges.reserve(e.edges.size());
  for (auto [u, v] : e.edges) edges.push_back(Edge(u, v));
  Graph g(e.n, edges);
  if (static_cast<int>(e.edges.size()) != g.size())
    throw Error(std::string("catalog entry ") + e.id + ": duplicate edge in transcription");
  if (g.degree_sequence() != e.degseq)
    throw Error(std::string("catalog entry ") + e.id + ": degree sequence mismatch");
  return g;
}

void check_identities(const Catalog& c) {
  auto g = [&](const char* id) -> const Graph& { return c.entries[c.by_id.at(id)].graph; };
  auto expect_iso = [&](const char* a, const char* b) {
    if (!are_isomorphic(g(a), g(b)))
      throw Error(std::string("catalog identity failed: ") + a + " vs " + b);
  };
  expect_iso("claw", "CE1");
  expect_iso("claw", "L1");
  expect_iso("bull", "CS5");
  expect_iso("bull", "L14");
  expect_iso("CE2", "L10");
  expect_iso("CE3", "L11");
  expect_iso("CE4", "L12");
  expect_iso("CE5", "L13");
  if (!are_isomorphic(g("CE3"), complete_bipartite(3, 3)))
    throw Error("catalog identity failed: CE3 vs K3,3");
  if (!are_isomorphic(g("claw"), star(3))) throw Error("catalog identity failed: claw vs star(3)");
}

const Catalog& instance() {
  static const Catalog c = [] {
    Catalog c;
    for (const Entry& e : raw_entries()) {
      c.by_id[e.id] = static_cast<int>(c.entries.size());
      c.entries.push_back(NamedGraph{e.id, build_entry(e), e.source});
    }
    check_identities(c);
    return c;
  }();
  return c;
}

}  // namespace

const NamedGraph& get(const std::string& id) {
  const Catalog& c = instance();
  auto it = c.by_id.find(id);
  if (it == c.by_id.end()) throw UnknownId("unknown catalog id: " + id);
  return c.entries[it->second];
}

std::vector<const NamedGraph*> all(const std::string& prefix) {
  const Catalog& c = instance();
  std::vector<const NamedGraph*> out;
  for (const NamedGraph& e : c.entries)
    if (e.id.starts_with(prefix)) out.push_back(&e);
  return out;
}

std::string id_of_isomorphic(const Graph& g) {
  for (const NamedGraph* e : all())
    if (are_isomorphic(g, e->graph)) return e->id;
  return "";
}

Graph path(int n) {
  if (n < 1 || n > 64) throw BadOrder("path needs 1 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge(i, i + 1));
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3 || n > 64) throw BadOrder("cycle needs 3 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph star(int leaves) {
  if (leaves < 1 || leaves > 63) throw BadOrder("star needs 1 <= leaves <= 63");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back(Edge(0, i));
  return Graph(leaves + 1, edges);
}

Graph complete(int n) {
  if (n < 1 || n > 64) throw BadOrder("complete graph needs 1 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge(i, j));
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1 || a + b > 64) throw BadOrder("complete bipartite needs sides >= 1, order <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back(Edge(i, a + j));
  return Graph(a + b, edges);
}

const GraphFamily& line_forbidden_family() {
  static const GraphFamily fam = [] {
    std::vector<Graph> gs;
    for (int i = 1; i <= 9; ++i) gs.push_back(get("L" + std::to_string(i)).graph);
    return GraphFamily(gs);
  }();
  return fam;
}

const GraphFamily& line_split_family() {
  static const GraphFamily fam = [] {
    std::vector<Graph> gs;
    for (int i = 14; i <= 34; ++i) gs.push_back(get("L" + std::to_string(i)).graph);
    return GraphFamily(gs);
  }();
  return fam;
}

}  // namespace catalog
}  // namespace contracta
