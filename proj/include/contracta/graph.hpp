#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "contracta/error.hpp"

namespace contracta {

using Word = std::uint64_t;

// Set of vertex indices in [0, 64), one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  // {0, 1, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(Word{1} << v); }

  constexpr Word bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  void add(int v) {
    if (v < 0 || v >= 64) throw OutOfRange("vertex index out of range");
    bits_ |= Word{1} << v;
  }
  void remove(int v) { bits_ &= ~(Word{1} << v); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  // Iterates set bits in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    Word rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

 private:
  Word bits_ = 0;
};

// Undirected edge; endpoints are normalized so that u < v.
struct Edge {
  int u;
  int v;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw OutOfRange("self-loops are not edges");
    if (a < 0 || b < 0) throw OutOfRange("negative vertex index");
  }
  constexpr bool operator==(const Edge&) const = default;
  constexpr auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on at most 64 vertices.
// Adjacency is stored as one 64-bit neighbor mask per vertex; all operations
// return fresh graphs.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const Edge> edges) : n_(check_order(n)), adj_(static_cast<size_t>(n)) {
    for (const Edge& e : edges) {
      if (e.v >= n_) throw OutOfRange("edge endpoint out of range");
      adj_[e.u] |= Word{1} << e.v;
      adj_[e.v] |= Word{1} << e.u;
    }
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Builds from neighbor masks; validates symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<Word> rows);

  int order() const { return n_; }
  int size() const;  // number of edges

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
  }

  VertexSet neighborhood(int v) const {
    check_vertex(v);
    return VertexSet(adj_[v]);
  }
  VertexSet closed_neighborhood(int v) const {
    check_vertex(v);
    return VertexSet(adj_[v] | (Word{1} << v));
  }
  // N(S) = union of open neighborhoods of members, minus S itself.
  VertexSet set_neighborhood(VertexSet s) const;

  VertexSet vertices() const { return VertexSet::first(n_); }
  int degree(int v) const { return neighborhood(v).size(); }
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // ascending
  bool has_isolated() const;  // true iff some vertex has degree 0
  std::vector<Edge> edges() const;  // lexicographically sorted

  // G/e: identifies the endpoints of e. Surviving vertices keep their
  // relative order; the merged vertex takes the last index (order()-2).
  Graph contract(Edge e) const;

  // Subgraph induced by s; vertices are relabeled by rank, order preserved.
  Graph induced(VertexSet s) const;

  // Appends vertex n adjacent to `neighbors`.
  Graph with_vertex(VertexSet neighbors) const;

  // Relabels: vertex v of this graph becomes vertex pos[v] of the result.
  Graph relabeled(std::span<const int> pos) const;

  // N[u] ⊆ N[v] (u is a corner dominated by v). Requires u != v.
  bool is_corner_dominated(int u, int v) const {
    if (u == v) throw OutOfRange("corner domination needs distinct vertices");
    return closed_neighborhood(u).subset_of(closed_neighborhood(v));
  }

  bool is_independent(VertexSet s) const;
  int independence_number() const;

  bool operator==(const Graph&) const = default;  // labeled equality

 private:
  static int check_order(int n) {
    if (n < 0 || n > 64) throw BadOrder("graph order must be in [0, 64]");
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw OutOfRange("vertex index out of range");
  }

  int n_ = 0;
  std::vector<Word> adj_;
};

// Packs the bits of `bits` selected by `mask` into the low-order positions,
// preserving order (portable PEXT).
Word compress_bits(Word bits, Word mask);

}  // namespace contracta
