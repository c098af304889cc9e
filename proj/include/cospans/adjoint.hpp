#pragma once

#include <optional>
#include <string>

#include "cospans/cospan.hpp"

namespace cospans {

// ---------------------------------------------------------------------------
// Adjunction data between cospans. An adjunction l -| r consists of
// unit : id_A => r . l and counit : l . r => id_B satisfying the two zigzag
// (triangle) identities. Zigzag composites are transported along explicitly
// constructed coherence cells, so the final comparison is literal function
// equality against the identity cell.
// ---------------------------------------------------------------------------

struct AdjunctionWitness {
  Cospan left;    // A -/-> B
  Cospan right;   // B -/-> A
  TwoCell unit;   // identity_cospan(A) => hcompose(right, left)
  TwoCell counit; // hcompose(left, right) => identity_cospan(B)
};

struct ZigzagReport {
  bool ok = false;
  bool left_triangle_ok = false;
  bool right_triangle_ok = false;
  std::string detail;
};

/// A cospan is left adjoint iff its wrong-way (right) leg is a bijection.
bool is_left_adjoint(const Cospan& c);

/// Canonical witness for a left-adjoint cospan: the right adjoint is the
/// mirror of the right-way normal form, the unit is the normal-form function
/// as a 2-cell, the counit is the fold of the glued apex.
AdjunctionWitness construct_right_adjoint(const Cospan& c);

/// Pastes both triangles and compares with identity cells.
ZigzagReport verify_adjunction(const AdjunctionWitness& w);

/// Brute-force oracle: enumerates candidate right adjoints with apex size
/// <= apex_bound together with all unit/counit cells, filtered by
/// verify_adjunction. Absence means only "no witness within the bound".
std::optional<AdjunctionWitness> search_adjoint(const Cospan& c, std::size_t apex_bound);

/// Default bound |src| + |tgt| + 2 covers the canonical witnesses with slack.
std::size_t default_apex_bound(const Cospan& c);

// ---------------------------------------------------------------------------
// Beck-Chevalley cells for commuting squares.
// ---------------------------------------------------------------------------

/// A commuting square g' . f = f' . g with f : A -> B, g : A -> C,
/// g' : B -> P, f' : C -> P.
struct CommutingSquare {
  FinFn f, g, gp, fp;

  static CommutingSquare make(FinFn f, FinFn g, FinFn gp, FinFn fp);
};

/// The mate comparing the two composites around the square:
/// hcompose(right_way(g), wrong_way(f)) => hcompose(wrong_way(f'), right_way(g')),
/// i.e. the mediating map B +_A C -> P induced by the cocone (g', f').
TwoCell beck_chevalley_cell(const CommutingSquare& sq);

/// True iff the Beck-Chevalley cell is invertible, i.e. the square has the
/// pushout universal property.
bool verify_cobase_change(const CommutingSquare& sq);

}  // namespace cospans
