#include "contracta/graph.hpp"

#include <algorithm>

namespace contracta {

Word compress_bits(Word bits, Word mask) {
  Word out = 0;
  int rank = 0;
  while (mask) {
    int i = std::countr_zero(mask);
    out |= ((bits >> i) & 1) << rank;
    ++rank;
    mask &= mask - 1;
  }
  return out;
}

Graph Graph::from_adjacency(std::vector<Word> rows) {
  int n = check_order(static_cast<int>(rows.size()));
  Word valid = VertexSet::first(n).bits();
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~valid) throw OutOfRange("neighbor mask out of range");
    if ((rows[u] >> u) & 1) throw OutOfRange("self-loops are not edges");
    for (int v : VertexSet(rows[u]))
      if (!((rows[v] >> u) & 1)) throw OutOfRange("adjacency not symmetric");
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (Word row : adj_) twice += std::popcount(row);
  return twice / 2;
}

VertexSet Graph::set_neighborhood(VertexSet s) const {
  Word acc = 0;
  for (int v : s) {
    check_vertex(v);
    acc |= adj_[v];
  }
  return VertexSet(acc) - s;
}

int Graph::max_degree() const {
  int best = 0;
  for (Word row : adj_) best = std::max(best, std::popcount(row));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> ds;
  ds.reserve(n_);
  for (Word row : adj_) ds.push_back(std::popcount(row));
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool Graph::has_isolated() const {
  for (Word row : adj_)
    if (row == 0) return true;
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(adj_[u] & ~((Word{1} << (u + 1)) - 1))) out.push_back(Edge(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::contract(Edge e) const {
  if (!adjacent(e.u, e.v)) throw NonEdge("cannot contract a non-edge");
  const Word keep = vertices().bits() & ~(Word{1} << e.u) & ~(Word{1} << e.v);
  const int m = n_ - 1;  // merged vertex gets index m - 1
  std::vector<Word> rows(static_cast<size_t>(m), 0);
  Word merged_nbrs = (adj_[e.u] | adj_[e.v]) & keep;
  int idx = 0;
  for (int x : VertexSet(keep)) {
    rows[idx] = compress_bits(adj_[x] & keep, keep);
    if ((merged_nbrs >> x) & 1) rows[idx] |= Word{1} << (m - 1);
    ++idx;
  }
  rows[m - 1] = compress_bits(merged_nbrs, keep);
  return from_adjacency(std::move(rows));
}

Graph Graph::induced(VertexSet s) const {
  if (!s.subset_of(vertices())) throw OutOfRange("induced set out of range");
  std::vector<Word> rows;
  rows.reserve(static_cast<size_t>(s.size()));
  for (int v : s) rows.push_back(compress_bits(adj_[v] & s.bits(), s.bits()));
  return from_adjacency(std::move(rows));
}

Graph Graph::with_vertex(VertexSet neighbors) const {
  check_order(n_ + 1);
  if (!neighbors.subset_of(vertices())) throw OutOfRange("new neighbors out of range");
  std::vector<Word> rows = adj_;
  rows.push_back(neighbors.bits());
  for (int v : neighbors) rows[v] |= Word{1} << n_;
  return from_adjacency(std::move(rows));
}

Graph Graph::relabeled(std::span<const int> pos) const {
  if (static_cast<int>(pos.size()) != n_) throw OutOfRange("relabeling has wrong length");
  std::vector<Word> rows(static_cast<size_t>(n_), 0);
  Word seen = 0;
  for (int v = 0; v < n_; ++v) {
    int p = pos[v];
    if (p < 0 || p >= n_) throw OutOfRange("relabeling target out of range");
    if ((seen >> p) & 1) throw OutOfRange("relabeling is not a bijection");
    seen |= Word{1} << p;
  }
  for (int v = 0; v < n_; ++v)
    for (int w : VertexSet(adj_[v])) rows[pos[v]] |= Word{1} << pos[w];
  return from_adjacency(std::move(rows));
}

bool Graph::is_independent(VertexSet s) const {
  if (!s.subset_of(vertices())) throw OutOfRange("set out of range");
  for (int v : s)
    if (adj_[v] & s.bits()) return false;
  return true;
}

namespace {

void mis_branch(const std::vector<Word>& adj, Word pool, int taken, int& best) {
  if (taken + std::popcount(pool) <= best) return;
  if (!pool) {
    best = std::max(best, taken);
    return;
  }
  int v = std::countr_zero(pool);
  // include v
  mis_branch(adj, pool & ~(adj[v] | (Word{1} << v)), taken + 1, best);
  // exclude v
  mis_branch(adj, pool & ~(Word{1} << v), taken, best);
}

}  // namespace

int Graph::independence_number() const {
  int best = 0;
  mis_branch(adj_, vertices().bits(), 0, best);
  return best;
}

}  // namespace contracta
