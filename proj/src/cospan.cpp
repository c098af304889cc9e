#include "cospans/cospan.hpp"

#include <algorithm>

namespace cospans {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Cospan Cospan::make(FinSet src, FinSet tgt, FinSet apex, FinFn left, FinFn right) {
  if (left.dom() != src || left.cod() != apex) {
    throw TypeMismatch("cospan left leg boundaries do not match");
  }
  if (right.dom() != tgt || right.cod() != apex) {
    throw TypeMismatch("cospan right leg boundaries do not match");
  }
  return Cospan{std::move(src), std::move(tgt), std::move(apex), std::move(left),
                std::move(right)};
}

TwoCell TwoCell::make(Cospan from, Cospan to, FinFn map) {
  if (from.src != to.src || from.tgt != to.tgt) {
    throw NotParallel("2-cell endpoints are not parallel cospans");
  }
  if (map.dom() != from.apex || map.cod() != to.apex) {
    throw TypeMismatch("2-cell map boundaries do not match the apexes");
  }
  if (compose_fn(map, from.left) != to.left) {
    throw TypeMismatch("2-cell map does not commute with the left legs");
  }
  if (compose_fn(map, from.right) != to.right) {
    throw TypeMismatch("2-cell map does not commute with the right legs");
  }
  return TwoCell{std::move(from), std::move(to), std::move(map)};
}

// ---------------------------------------------------------------------------
// 1-morphisms
// ---------------------------------------------------------------------------

Cospan identity_cospan(const FinSet& a) {
  return Cospan{a, a, a, FinFn::identity(a), FinFn::identity(a)};
}

Cospan right_way(const FinFn& f) {
  return Cospan{f.dom(), f.cod(), f.cod(), f, FinFn::identity(f.cod())};
}

Cospan wrong_way(const FinFn& f) { return mirror(right_way(f)); }

Cospan mirror(const Cospan& c) { return Cospan{c.tgt, c.src, c.apex, c.right, c.left}; }

HComposite hcompose_legs(const Cospan& c2, const Cospan& c1) {
  if (c1.tgt != c2.src) {
    throw TypeMismatch("hcompose: target of the first cospan differs from the "
                       "source of the second");
  }
  Pushout po = pushout(c1.right, c2.left);
  Cospan comp = Cospan::make(c1.src, c2.tgt, po.apex, compose_fn(po.p1, c1.left),
                             compose_fn(po.p2, c2.right));
  return HComposite{std::move(comp), po.p1, po.p2};
}

Cospan hcompose(const Cospan& c2, const Cospan& c1) {
  return hcompose_legs(c2, c1).composite;
}

Cospan tensor(const Cospan& c1, const Cospan& c2) {
  Coproduct s = coproduct(c1.src, c2.src);
  Coproduct t = coproduct(c1.tgt, c2.tgt);
  Coproduct x = coproduct(c1.apex, c2.apex);
  return Cospan::make(s.sum, t.sum, x.sum, coproduct_fn(c1.left, c2.left),
                      coproduct_fn(c1.right, c2.right));
}

// ---------------------------------------------------------------------------
// 2-morphisms
// ---------------------------------------------------------------------------

TwoCell identity_cell(const Cospan& c) {
  return TwoCell{c, c, FinFn::identity(c.apex)};
}

TwoCell vcompose(const TwoCell& beta, const TwoCell& alpha) {
  if (beta.from != alpha.to) {
    throw TypeMismatch("vcompose: cells are not vertically composable");
  }
  return TwoCell{alpha.from, beta.to, compose_fn(beta.map, alpha.map)};
}

TwoCell whisker_left(const Cospan& g, const TwoCell& alpha) {
  if (alpha.from.tgt != g.src) {
    throw TypeMismatch("whisker_left: boundary mismatch");
  }
  HComposite from = hcompose_legs(g, alpha.from);
  HComposite to = hcompose_legs(g, alpha.to);
  auto u = verify_pushout_universal(
      alpha.from.right, g.left, from.from_inner, from.from_outer,
      compose_fn(to.from_inner, alpha.map), to.from_outer);
  if (!u) throw NotACocone("whisker_left: no mediating map (internal)");
  return TwoCell::make(from.composite, to.composite, *u);
}

TwoCell whisker_right(const TwoCell& alpha, const Cospan& g) {
  if (g.tgt != alpha.from.src) {
    throw TypeMismatch("whisker_right: boundary mismatch");
  }
  HComposite from = hcompose_legs(alpha.from, g);
  HComposite to = hcompose_legs(alpha.to, g);
  auto u = verify_pushout_universal(
      g.right, alpha.from.left, from.from_inner, from.from_outer, to.from_inner,
      compose_fn(to.from_outer, alpha.map));
  if (!u) throw NotACocone("whisker_right: no mediating map (internal)");
  return TwoCell::make(from.composite, to.composite, *u);
}

TwoCell hcompose_cells(const TwoCell& beta, const TwoCell& alpha) {
  // Whiskering orders agree on the nose: both composites are mediating maps
  // for the same cocone.
  return vcompose(whisker_right(beta, alpha.to), whisker_left(beta.from, alpha));
}

TwoCell tensor_cells(const TwoCell& alpha, const TwoCell& beta) {
  return TwoCell::make(tensor(alpha.from, beta.from), tensor(alpha.to, beta.to),
                       coproduct_fn(alpha.map, beta.map));
}

bool is_invertible_cell(const TwoCell& alpha) { return is_bijection(alpha.map); }

TwoCell invert_cell(const TwoCell& alpha) {
  return TwoCell::make(alpha.to, alpha.from, invert(alpha.map));
}

std::optional<TwoCell> find_two_iso(const Cospan& c, const Cospan& d) {
  if (c.src != d.src || c.tgt != d.tgt) {
    throw NotParallel("find_two_iso requires parallel cospans");
  }
  const std::size_t n = c.apex.size();
  if (n != d.apex.size()) return std::nullopt;

  std::vector<std::optional<std::size_t>> m(n);
  std::vector<bool> hit(n, false);
  auto force = [&](std::size_t at, std::size_t value) {
    if (m[at]) return *m[at] == value;
    if (hit[value]) return false;  // would break injectivity
    m[at] = value;
    hit[value] = true;
    return true;
  };
  for (std::size_t i = 0; i < c.src.size(); ++i) {
    if (!force(c.left.at_index(i), d.left.at_index(i))) return std::nullopt;
  }
  for (std::size_t i = 0; i < c.tgt.size(); ++i) {
    if (!force(c.right.at_index(i), d.right.at_index(i))) return std::nullopt;
  }
  // Off-leg elements are unconstrained; match them in canonical order.
  std::vector<std::size_t> free_targets;
  for (std::size_t j = 0; j < n; ++j) {
    if (!hit[j]) free_targets.push_back(j);
  }
  std::vector<std::size_t> idx(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    idx[i] = m[i] ? *m[i] : free_targets[next++];
  }
  return TwoCell::make(c, d, FinFn::from_indices(c.apex, d.apex, std::move(idx)));
}

// ---------------------------------------------------------------------------
// Coherence isomorphisms
// ---------------------------------------------------------------------------

namespace {

// Transport along two jointly-surjective cocones over the same family of
// apexes: the unique map sending cocone_a images to cocone_b images.
FinFn transport_cocones(const FinSet& from_apex, const FinSet& to_apex,
                        const std::vector<FinFn>& cocone_a,
                        const std::vector<FinFn>& cocone_b) {
  std::vector<std::optional<std::size_t>> m(from_apex.size());
  for (std::size_t leg = 0; leg < cocone_a.size(); ++leg) {
    const FinFn& a = cocone_a[leg];
    const FinFn& b = cocone_b[leg];
    for (std::size_t i = 0; i < a.dom().size(); ++i) {
      std::size_t at = a.at_index(i);
      std::size_t value = b.at_index(i);
      if (m[at] && *m[at] != value) {
        throw Error("coherence transport is ill-defined (internal)");
      }
      m[at] = value;
    }
  }
  std::vector<std::size_t> idx(from_apex.size());
  for (std::size_t i = 0; i < from_apex.size(); ++i) {
    if (!m[i]) throw Error("coherence transport misses an element (internal)");
    idx[i] = *m[i];
  }
  return FinFn::from_indices(from_apex, to_apex, std::move(idx));
}

TwoCell coherence_cell(const Cospan& from, const Cospan& to, FinFn map) {
  TwoCell cell = TwoCell::make(from, to, std::move(map));
  if (!is_invertible_cell(cell)) {
    throw Error("coherence cell is not a bijection (internal)");
  }
  return cell;
}

}  // namespace

TwoCell associator(const Cospan& c3, const Cospan& c2, const Cospan& c1) {
  HComposite inner_l = hcompose_legs(c2, c1);
  HComposite lhs = hcompose_legs(c3, inner_l.composite);
  HComposite inner_r = hcompose_legs(c3, c2);
  HComposite rhs = hcompose_legs(inner_r.composite, c1);

  std::vector<FinFn> coc_l = {
      compose_fn(lhs.from_inner, inner_l.from_inner),
      compose_fn(lhs.from_inner, inner_l.from_outer),
      lhs.from_outer,
  };
  std::vector<FinFn> coc_r = {
      rhs.from_inner,
      compose_fn(rhs.from_outer, inner_r.from_inner),
      compose_fn(rhs.from_outer, inner_r.from_outer),
  };
  FinFn map = transport_cocones(lhs.composite.apex, rhs.composite.apex, coc_l, coc_r);
  return coherence_cell(lhs.composite, rhs.composite, std::move(map));
}

TwoCell lunitor(const Cospan& c) {
  HComposite comp = hcompose_legs(identity_cospan(c.tgt), c);
  // Pushing out along an identity leg leaves the apex injection bijective.
  return coherence_cell(comp.composite, c, invert(comp.from_inner));
}

TwoCell runitor(const Cospan& c) {
  HComposite comp = hcompose_legs(c, identity_cospan(c.src));
  return coherence_cell(comp.composite, c, invert(comp.from_outer));
}

TwoCell tensor_hcompose_interchange(const Cospan& c2, const Cospan& c1,
                                    const Cospan& d2, const Cospan& d1) {
  Cospan t1 = tensor(c1, d1);
  Cospan t2 = tensor(c2, d2);
  HComposite lhs = hcompose_legs(t2, t1);
  HComposite hc = hcompose_legs(c2, c1);
  HComposite hd = hcompose_legs(d2, d1);
  Cospan rhs = tensor(hc.composite, hd.composite);

  auto u = verify_pushout_universal(
      t1.right, t2.left, lhs.from_inner, lhs.from_outer,
      coproduct_fn(hc.from_inner, hd.from_inner),
      coproduct_fn(hc.from_outer, hd.from_outer));
  if (!u) throw Error("interchange mediating map missing (internal)");
  return coherence_cell(lhs.composite, rhs, *u);
}

// ---------------------------------------------------------------------------
// Plumbing
// ---------------------------------------------------------------------------

Cospan reindex_boundaries(const Cospan& c, const FinFn& src_bij, const FinFn& tgt_bij) {
  if (src_bij.dom() != c.src || tgt_bij.dom() != c.tgt) {
    throw TypeMismatch("reindex_boundaries: bijections do not start at the boundaries");
  }
  return Cospan::make(src_bij.cod(), tgt_bij.cod(), c.apex,
                      compose_fn(c.left, invert(src_bij)),
                      compose_fn(c.right, invert(tgt_bij)));
}

namespace {

// Bijection from a coproduct onto the plain union of the factor labels.
FinFn strip_prefixes(const FinSet& a, const FinSet& b) {
  Coproduct cp = coproduct(a, b);
  std::vector<std::string> merged;
  merged.reserve(a.size() + b.size());
  for (const auto& x : a.elements()) merged.push_back(x);
  for (const auto& x : b.elements()) merged.push_back(x);
  FinSet flat = FinSet::make(std::move(merged));
  std::vector<std::size_t> idx(cp.sum.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    idx[cp.inj1.at_index(i)] = flat.index_of(a.label(i));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    idx[cp.inj2.at_index(i)] = flat.index_of(b.label(i));
  }
  return FinFn::from_indices(cp.sum, flat, std::move(idx));
}

}  // namespace

Cospan tensor_flat(const Cospan& c1, const Cospan& c2) {
  Cospan t = tensor(c1, c2);
  return reindex_boundaries(t, strip_prefixes(c1.src, c2.src),
                            strip_prefixes(c1.tgt, c2.tgt));
}

Cospan tensor_flat_many(const std::vector<Cospan>& parts) {
  std::vector<std::string> src_labels, tgt_labels, apex_labels;
  for (const Cospan& p : parts) {
    for (const auto& e : p.src.elements()) src_labels.push_back(e);
    for (const auto& e : p.tgt.elements()) tgt_labels.push_back(e);
    for (const auto& e : p.apex.elements()) apex_labels.push_back(e);
  }
  FinSet src = FinSet::make(src_labels);
  FinSet tgt = FinSet::make(tgt_labels);

  std::sort(apex_labels.begin(), apex_labels.end());
  bool apex_disjoint =
      std::adjacent_find(apex_labels.begin(), apex_labels.end()) == apex_labels.end();

  auto apex_label = [&](std::size_t part, const std::string& e) {
    return apex_disjoint ? e : std::to_string(part) + ":" + e;
  };
  std::vector<std::string> final_apex;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& e : parts[k].apex.elements()) {
      final_apex.push_back(apex_label(k, e));
    }
  }
  FinSet apex = FinSet::make(std::move(final_apex));

  std::vector<std::size_t> li(src.size()), ri(tgt.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Cospan& p = parts[k];
    for (std::size_t i = 0; i < p.src.size(); ++i) {
      li[src.index_of(p.src.label(i))] =
          apex.index_of(apex_label(k, p.apex.label(p.left.at_index(i))));
    }
    for (std::size_t i = 0; i < p.tgt.size(); ++i) {
      ri[tgt.index_of(p.tgt.label(i))] =
          apex.index_of(apex_label(k, p.apex.label(p.right.at_index(i))));
    }
  }
  FinFn left = FinFn::from_indices(src, apex, std::move(li));
  FinFn right = FinFn::from_indices(tgt, apex, std::move(ri));
  return Cospan::make(std::move(src), std::move(tgt), std::move(apex),
                      std::move(left), std::move(right));
}

}  // namespace cospans
