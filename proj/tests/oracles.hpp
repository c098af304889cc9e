#pragma once

// Independent test oracles. These recompute what the library computes by a
// different route (relation closure instead of union-find, exhaustive
// enumeration instead of constraint propagation) and must stay decoupled
// from the implementation paths they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "cospans/cospan.hpp"

namespace oracles {

using cospans::Cospan;
using cospans::FinFn;
using cospans::FinSet;
using cospans::TwoCell;

// Partition of cod(f) + cod(g) under the relation f(a) ~ g(a), computed by
// boolean transitive closure over the full relation matrix.
inline std::vector<std::vector<std::size_t>> closure_partition(const FinFn& f,
                                                               const FinFn& g) {
  const std::size_t nb = f.cod().size();
  const std::size_t n = nb + g.cod().size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    std::size_t u = f.at_index(a);
    std::size_t v = nb + g.at_index(a);
    rel[u][v] = rel[v][u] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j]) {
        cls.push_back(j);
        seen[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// All mediating maps u with u.p1 = h1 and u.p2 = h2, found by exhausting
// every function from the candidate apex.
inline std::vector<FinFn> exhaustive_mediating(const FinFn& p1, const FinFn& p2,
                                               const FinFn& h1, const FinFn& h2) {
  std::vector<FinFn> found;
  for (const FinFn& u : cospans::enumerate_functions(p1.cod(), h1.cod())) {
    if (compose_fn(u, p1) == h1 && compose_fn(u, p2) == h2) found.push_back(u);
  }
  return found;
}

// All bijective 2-cells between parallel cospans, by trying every apex
// permutation.
inline std::vector<TwoCell> exhaustive_two_isos(const Cospan& c, const Cospan& d) {
  std::vector<TwoCell> found;
  if (c.apex.size() != d.apex.size()) return found;
  std::vector<std::size_t> perm(c.apex.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    FinFn m = FinFn::from_indices(c.apex, d.apex, perm);
    if (compose_fn(m, c.left) != d.left) continue;
    if (compose_fn(m, c.right) != d.right) continue;
    found.push_back(TwoCell{c, d, m});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace oracles
