#pragma once

#include <optional>

#include "cospans/finset.hpp"

namespace cospans {

// ---------------------------------------------------------------------------
// The 2-truncated symmetric monoidal 2-category of cospans over finite sets.
// A 1-morphism A -/-> B is a cospan A -> X <- B; a 2-morphism is a map of
// apexes commuting with both legs. Horizontal composition glues apexes by
// pushout; the monoidal product is the disjoint union.
// ---------------------------------------------------------------------------

struct Cospan {
  FinSet src, tgt, apex;
  FinFn left;   // src -> apex
  FinFn right;  // tgt -> apex

  static Cospan make(FinSet src, FinSet tgt, FinSet apex, FinFn left, FinFn right);

  friend bool operator==(const Cospan&, const Cospan&) = default;
  friend auto operator<=>(const Cospan&, const Cospan&) = default;
};

struct TwoCell {
  Cospan from, to;
  FinFn map;  // apex(from) -> apex(to)

  /// Validates that from and to are parallel and that map commutes with
  /// both legs exactly.
  static TwoCell make(Cospan from, Cospan to, FinFn map);

  friend bool operator==(const TwoCell&, const TwoCell&) = default;
};

// ---- 1-morphism constructors ----------------------------------------------

Cospan identity_cospan(const FinSet& a);
/// A -f-> B = B.
Cospan right_way(const FinFn& f);
/// B = B <-f- A, the mirror of right_way(f).
Cospan wrong_way(const FinFn& f);
/// Swap source and target; a strict involution.
Cospan mirror(const Cospan& c);

// ---- composition and tensor -------------------------------------------------

/// c2 after c1 (c1 : A -/-> B, c2 : B -/-> C); apex is the pushout of
/// right(c1) and left(c2). Boundary objects are never renamed.
Cospan hcompose(const Cospan& c2, const Cospan& c1);

/// hcompose together with the pushout injections of the two apexes.
struct HComposite {
  Cospan composite;
  FinFn from_inner;  // apex(c1) -> apex(composite)
  FinFn from_outer;  // apex(c2) -> apex(composite)
};
HComposite hcompose_legs(const Cospan& c2, const Cospan& c1);

/// Componentwise disjoint union.
Cospan tensor(const Cospan& c1, const Cospan& c2);

// ---- 2-morphism structure ---------------------------------------------------

TwoCell identity_cell(const Cospan& c);
TwoCell vcompose(const TwoCell& beta, const TwoCell& alpha);
/// g * alpha : hcompose(g, from) => hcompose(g, to), the mediating map of
/// pushouts.
TwoCell whisker_left(const Cospan& g, const TwoCell& alpha);
/// alpha * g : hcompose(from, g) => hcompose(to, g).
TwoCell whisker_right(const TwoCell& alpha, const Cospan& g);
TwoCell hcompose_cells(const TwoCell& beta, const TwoCell& alpha);
TwoCell tensor_cells(const TwoCell& alpha, const TwoCell& beta);

bool is_invertible_cell(const TwoCell& alpha);
TwoCell invert_cell(const TwoCell& alpha);

/// Bijective 2-cell between parallel cospans when one exists. The legs force
/// the map on their images; the remainder is matched in canonical order, so
/// the result is deterministic. Throws NotParallel on mismatched boundaries.
std::optional<TwoCell> find_two_iso(const Cospan& c, const Cospan& d);

// ---- coherence isomorphisms -------------------------------------------------
// Associators and unitors of pushout composition, computed explicitly as
// mediating bijections. Each throws Error if the mediating map fails to be a
// bijective cell, which would indicate a bug.

/// hcompose(c3, hcompose(c2, c1)) => hcompose(hcompose(c3, c2), c1).
TwoCell associator(const Cospan& c3, const Cospan& c2, const Cospan& c1);
/// hcompose(identity_cospan(tgt), c) => c.
TwoCell lunitor(const Cospan& c);
/// hcompose(c, identity_cospan(src)) => c.
TwoCell runitor(const Cospan& c);
/// hcompose(tensor(c2, d2), tensor(c1, d1)) => tensor(hcompose(c2, c1),
/// hcompose(d2, d1)).
TwoCell tensor_hcompose_interchange(const Cospan& c2, const Cospan& c1,
                                    const Cospan& d2, const Cospan& d1);

// ---- plumbing ---------------------------------------------------------------

/// Conjugate the boundaries by bijections src_bij : src -> src',
/// tgt_bij : tgt -> tgt'; the apex is untouched.
Cospan reindex_boundaries(const Cospan& c, const FinFn& src_bij, const FinFn& tgt_bij);

/// Tensor of cospans with label-disjoint boundaries, keeping the boundary
/// labels flat (no L./R. prefixes); the apex is still prefixed.
Cospan tensor_flat(const Cospan& c1, const Cospan& c2);

/// n-ary flat tensor: boundaries must be pairwise label-disjoint and stay
/// flat; apex labels stay flat too when disjoint, otherwise they get
/// positional "<k>:" prefixes. The tensor of identity cospans is therefore
/// exactly the identity cospan of the combined boundary.
Cospan tensor_flat_many(const std::vector<Cospan>& parts);

}  // namespace cospans
