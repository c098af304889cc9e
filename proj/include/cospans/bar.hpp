#pragma once

#include <vector>

#include "cospans/frobenius.hpp"

namespace cospans {

// ---------------------------------------------------------------------------
// Bar complexes of canonical algebras: levels B + A^k + C with faces given by
// the multiplication/actions and degeneracies by the unit, all as right-way
// cospans. Level objects carry flat copy labels ("m/x", "a<i>/x", "n/x").
// ---------------------------------------------------------------------------

struct BarComplexTruncation {
  FinSet base;      // A
  FinFn to_left;    // f : A -> B, making B an A-algebra
  FinFn to_right;   // g : A -> C
  std::size_t levels;

  std::vector<FinSet> level_objects;             // index k = 0..levels
  std::vector<std::vector<Cospan>> faces;        // faces[k][i] : level k -/-> level k-1
  std::vector<std::vector<Cospan>> degeneracies; // degeneracies[k][i] : level k -/-> level k+1
};

/// Builds levels 0..n and verifies all simplicial identities up to 2-iso;
/// throws SimplicialIdentityFailure if one fails (which must never happen).
BarComplexTruncation bar_truncation(const FinFn& f, const FinFn& g, std::size_t n);

struct PushoutAlgebraResult {
  Pushout carrier;          // pushout of f and g
  AlgebraDatum algebra;     // canonical algebra on the pushout
  Cospan cocone_left;       // right_way(p1) : B -/-> P
  Cospan cocone_right;      // right_way(p2) : C -/-> P
  bool square_commutes;     // the algebra-map square, up to 2-iso
  RigidReport rigid;
};

PushoutAlgebraResult pushout_algebra(const FinFn& f, const FinFn& g);

/// The cocones from each bar level onto the pushout carrier commute with all
/// faces and degeneracies up to 2-iso.
bool verify_bar_cocone(const BarComplexTruncation& t, const PushoutAlgebraResult& p);

/// Image of the carrier pushout square under the right-way functor passes
/// the cobase-change test.
bool forgetful_cobase_change_check(const FinFn& f, const FinFn& g);

/// The pushout square with top id+fold+id, left fold+fold, right ternary
/// fold and bottom fold.
CommutingSquare double_fold_square(const FinSet& a);

}  // namespace cospans
