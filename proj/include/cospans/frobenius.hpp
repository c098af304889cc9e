#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cospans/adjoint.hpp"
#include "cospans/cospan.hpp"

namespace cospans {

// ---------------------------------------------------------------------------
// Commutative algebra data on a cospan object, with explicitly stored
// witness cells. Pastings are 1-truncated: unitality, associativity and
// commutativity are witnessed up to bijective 2-cells with no higher
// coherence.
// ---------------------------------------------------------------------------

struct AlgebraWitnesses {
  std::optional<TwoCell> left_unitality;
  std::optional<TwoCell> right_unitality;
  std::optional<TwoCell> associativity;
  std::optional<TwoCell> commutativity;

  bool complete() const {
    return left_unitality && right_unitality && associativity && commutativity;
  }
};

struct AlgebraDatum {
  FinSet carrier;
  Cospan unit;  // 0 -/-> A
  Cospan mult;  // A+A -/-> A
  AlgebraWitnesses witnesses;
};

/// Unit = right-way image of the initial map, multiplication = right-way
/// image of the fold; all four witness cells are found (their absence would
/// be a bug).
AlgebraDatum canonical_algebra(const FinSet& a);

/// Assembles an algebra datum from explicit structure cospans, searching for
/// (possibly absent) witness cells. Used for perturbed fixtures.
AlgebraDatum make_algebra(FinSet carrier, Cospan unit, Cospan mult);

/// Right adjoints of unit and multiplication, which for cospans are their
/// mirrors. Throws NotRigidCandidate when a structure map fails the
/// left-adjoint test.
Cospan counit_of(const AlgebraDatum& d);
Cospan comult_of(const AlgebraDatum& d);

// ---------------------------------------------------------------------------
// Frobenius structure: counit and comultiplication with counitality
// witnesses (eps x id).delta ~ id ~ (id x eps).delta.
// ---------------------------------------------------------------------------

struct FrobeniusDatum {
  AlgebraDatum algebra;
  Cospan counit;  // A -/-> 0
  Cospan comult;  // A -/-> A+A
  TwoCell left_counitality;
  TwoCell right_counitality;
};

struct FrobeniusReport {
  bool ok = false;
  std::string failure;  // "CounitalityFailed: <side>" when not ok
  std::optional<FrobeniusDatum> datum;
};

FrobeniusReport verify_frobenius(const AlgebraDatum& d);
/// Variant with explicitly supplied counit/comultiplication candidates.
FrobeniusReport verify_frobenius_with(const AlgebraDatum& d, Cospan counit,
                                      Cospan comult);

// ---------------------------------------------------------------------------
// Self-duality of objects: ev = (A+A -> A <- 0), coev its mirror, both
// zigzag composites 2-isomorphic to the identity.
// ---------------------------------------------------------------------------

struct DualityData {
  FinSet object;
  Cospan ev;    // A+A -/-> 0
  Cospan coev;  // 0 -/-> A+A
  TwoCell zigzag_left;
  TwoCell zigzag_right;
};

DualityData self_duality(const FinSet& a);

/// Transpose of c : A -/-> B through the self-dualities, i.e. the pasting
/// (ev_B x id).(id x c x id).(id x coev_A) with unitor/associator fillers.
Cospan transpose_general(const Cospan& c, const DualityData& da, const DualityData& db);

/// Builds the canonical witness for right_way(f) -| mirror(right_way(f)) and
/// checks the zigzag identities.
bool verify_adjoint_to_transpose(const FinFn& f);

// ---------------------------------------------------------------------------
// Rigidity: unit and multiplication left adjoint, and the projection-formula
// composite at the bimodule instance M = A+A, N = A, f = mult invertible.
// ---------------------------------------------------------------------------

/// The three-step composite
///   beta_M (id x mult^R x id) => mult^R mult beta_M (id x mult^R x id)
///                             => mult^R beta_N (id x mult mult^R x id)
///                             => mult^R beta_N
/// as one pasted 2-cell. Throws NotLeftAdjoint when mult is not left adjoint.
TwoCell projection_formula_cell(const AlgebraDatum& d);

struct RigidReport {
  bool ok = false;
  bool unit_left_adjoint = false;
  bool mult_left_adjoint = false;
  bool projection_formula_invertible = false;
};

RigidReport verify_rigid(const AlgebraDatum& d);

// ---------------------------------------------------------------------------
// Desk-scale classification: every multiplication on A with two-sided
// unitality against the right-way unit is 2-isomorphic to the fold.
// ---------------------------------------------------------------------------

struct ClassifiedMultiplication {
  Cospan mult;
  TwoCell left_unitality;
  TwoCell right_unitality;
  TwoCell iso_to_fold;
};

/// Enumerates candidates with apex size <= apex_bound. Throws
/// ClassificationCounterexample if a unital solution fails to be 2-iso to
/// the fold (which must never happen).
std::vector<ClassifiedMultiplication> classify_unital_multiplications(
    const FinSet& a, std::size_t apex_bound);

/// Unitality pastings of (unit, mult) against the coproduct unitors;
/// each component is present iff the corresponding bijective witness exists.
std::pair<std::optional<TwoCell>, std::optional<TwoCell>> unitality_witnesses(
    const FinSet& a, const Cospan& unit, const Cospan& mult);

}  // namespace cospans
