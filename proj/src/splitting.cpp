#include "contracta/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "contracta/error.hpp"
#include "contracta/iso.hpp"
#include "contracta/parallel.hpp"

namespace contracta {

Graph apply_split(const SplitSpec& spec) {
  const Graph& h = spec.base;
  const int n = h.order();
  const int v = spec.vertex;
  const VertexSet nv = h.neighborhood(v);  // validates v
  if ((spec.u_side | spec.w_side) != nv)
    throw MalformedSpec("splitting sides must cover N(v) exactly");

  const Word keep = (h.vertices() - VertexSet::single(v)).bits();
  std::vector<Word> rows(static_cast<size_t>(n) + 1, 0);
  for (int x : VertexSet(keep)) {
    Word row = compress_bits(h.neighborhood(x).bits() & keep, keep);
    if (spec.u_side.contains(x)) row |= Word{1} << (n - 1);
    if (spec.w_side.contains(x)) row |= Word{1} << n;
    rows[x - (x > v ? 1 : 0)] = row;
  }
  rows[n - 1] = compress_bits(spec.u_side.bits(), keep) | (Word{1} << n);
  rows[n] = compress_bits(spec.w_side.bits(), keep) | (Word{1} << (n - 1));
  return Graph::from_adjacency(std::move(rows));
}

GraphFamily splittings_of_vertex(const Graph& h, int v, CoverMode mode) {
  const VertexSet nv = h.neighborhood(v);
  const int d = nv.size();
  if (d > 16) throw LimitExceeded("splitting a vertex of degree > 16");
  const std::vector<int> nbr = nv.to_vector();

  long total = 1;
  for (int i = 0; i < d; ++i) total *= mode == CoverMode::Overlapping ? 3 : 2;

  // Cover code -> (U, W): base-3 digits assign each neighbor to U, W, or
  // both; base-2 digits assign to exactly one side.
  auto build = [&](long code) {
    VertexSet u, w;
    for (int i = 0; i < d; ++i) {
      if (mode == CoverMode::Overlapping) {
        int digit = static_cast<int>(code % 3);
        code /= 3;
        if (digit != 1) u.add(nbr[i]);
        if (digit != 0) w.add(nbr[i]);
      } else {
        ((code >> i) & 1) ? w.add(nbr[i]) : u.add(nbr[i]);
      }
    }
    return apply_split({h, v, u, w});
  };

  GraphFamily out;
  if (total >= 2048) {
    // Canonicalize covers in parallel, then merge one representative per class.
    const int count = static_cast<int>(total);
    std::vector<Graph> slots(count);
    std::vector<CanonicalForm> forms(count);
    parallel_for(count, [&](int i) {
      slots[i] = build(i);
      forms[i] = canonical_form(slots[i]);
    });
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return forms[a] < forms[b]; });
    for (size_t k = 0; k < order.size(); ++k)
      if (k == 0 || !(forms[order[k]] == forms[order[k - 1]])) out.insert(slots[order[k]]);
  } else {
    for (long code = 0; code < total; ++code) out.insert(build(code));
  }
  return out;
}

GraphFamily splittings(const Graph& h, CoverMode mode, bool orbit_reduce) {
  std::vector<int> reps;
  if (orbit_reduce) {
    for (const std::vector<int>& cls : automorphism_orbits(h).classes) reps.push_back(cls.front());
  } else {
    for (int v : h.vertices()) reps.push_back(v);
  }
  GraphFamily out;
  for (int v : reps)
    for (const Graph& g : splittings_of_vertex(h, v, mode)) out.insert(g);
  return out;
}

GraphFamily splittings_family(const GraphFamily& fam, CoverMode mode) {
  GraphFamily out;
  for (const Graph& h : fam)
    for (const Graph& g : splittings(h, mode)) out.insert(g);
  return out;
}

GraphFamily free_split_set(const GraphFamily& fam, CoverMode mode) {
  GraphFamily out;
  for (const Graph& g : splittings_family(elm(fam), mode))
    if (is_free(g, fam)) out.insert(g);
  return out;
}

}  // namespace contracta
