#pragma once

#include <optional>
#include <vector>

#include "contracta/graph.hpp"
#include "contracta/iso.hpp"

namespace contracta {

// A finite set of graphs with one representative per isomorphism class,
// kept sorted by (order, canonical bit string) for deterministic output.
class GraphFamily {
 public:
  GraphFamily() = default;
  explicit GraphFamily(std::vector<Graph> members);

  // Inserts unless an isomorphic member is present; returns whether added.
  bool insert(const Graph& g);

  bool contains_isomorphic(const Graph& g) const { return index_of(g).has_value(); }
  std::optional<int> index_of(const Graph& g) const;

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const Graph& operator[](int i) const { return members_[i]; }
  const CanonicalForm& form(int i) const { return forms_[i]; }

  std::vector<Graph>::const_iterator begin() const { return members_.begin(); }
  std::vector<Graph>::const_iterator end() const { return members_.end(); }

  bool operator==(const GraphFamily& o) const { return forms_ == o.forms_; }

  // Concatenation of member canonical forms; equal iff same family.
  std::vector<Word> signature() const;

 private:
  std::vector<Graph> members_;
  std::vector<CanonicalForm> forms_;  // parallel to members_, defines the order
};

// True iff no member of fam occurs in g as an induced subgraph.
bool is_free(const Graph& g, const GraphFamily& fam);

struct ExistWitness {
  int member;          // index into fam
  VertexSet vertices;  // induces fam[member] in g
};

// A witness that g is fam-exist, or nullopt when g is fam-free.
std::optional<ExistWitness> witness_exist(const Graph& g, const GraphFamily& fam);

// Minimal members: drops every member that contains a different member as an
// induced subgraph. A graph is fam-free iff it is elm(fam)-free.
GraphFamily elm(const GraphFamily& fam);

}  // namespace contracta
