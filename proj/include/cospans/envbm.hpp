#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cospans/cospan.hpp"

namespace cospans {

// ---------------------------------------------------------------------------
// The symmetric monoidal envelope of the bimodule operad, as an explicit
// combinatorial category: objects are finite sets partitioned into three
// parts, morphisms are functions with linearly ordered fibers subject to
//   (1) fibers of left-part elements stay in the left part,
//   (2) fibers of right-part elements stay in the right part,
//   (3) fibers of middle-part elements are ordered as
//       left segment < the unique middle element < right segment.
// ---------------------------------------------------------------------------

struct EnvBMObject {
  FinSet left, middle, right;

  /// Parts must be pairwise label-disjoint.
  static EnvBMObject make(FinSet left, FinSet middle, FinSet right);

  FinSet underlying() const;
  std::size_t total_size() const {
    return left.size() + middle.size() + right.size();
  }
  /// 0 = left, 1 = middle, 2 = right; throws UnknownName otherwise.
  int part_of(const std::string& label) const;

  friend bool operator==(const EnvBMObject&, const EnvBMObject&) = default;
  friend auto operator<=>(const EnvBMObject&, const EnvBMObject&) = default;
};

/// Canonical object with labels l0.., m0.., r0...
EnvBMObject canonical_envbm_object(std::size_t nl, std::size_t nm, std::size_t nr);

struct EnvBMMorphism {
  EnvBMObject src, tgt;
  FinFn fn;  // underlying(src) -> underlying(tgt)
  std::map<std::string, std::vector<std::string>> fiber_orders;

  /// Checks boundaries and that orders list source labels for exactly the
  /// target labels; the partition constraints are envbm_validate's job.
  static EnvBMMorphism make(EnvBMObject src, EnvBMObject tgt, FinFn fn,
                            std::map<std::string, std::vector<std::string>> fiber_orders);

  friend bool operator==(const EnvBMMorphism&, const EnvBMMorphism&) = default;
};

struct EnvBMValidation {
  bool ok = true;
  std::vector<std::string> violations;
};

EnvBMValidation envbm_validate(const EnvBMMorphism& m);

EnvBMMorphism envbm_identity(const EnvBMObject& x);

/// Composite function with lexicographic fiber orders: the outer order comes
/// from g, the inner orders from f.
EnvBMMorphism envbm_compose(const EnvBMMorphism& g, const EnvBMMorphism& f);

/// Partwise disjoint union (with the coproduct's L./R. label scheme).
EnvBMObject envbm_tensor(const EnvBMObject& x, const EnvBMObject& y);
EnvBMMorphism envbm_tensor(const EnvBMMorphism& f, const EnvBMMorphism& g);

/// All valid morphisms x -> y with all valid fiber orderings, in a
/// deterministic order.
std::vector<EnvBMMorphism> envbm_hom(const EnvBMObject& x, const EnvBMObject& y);

/// The five generating morphisms: the bi-action {l,m,r} -> {m}, the two
/// units 0 -> {l}, 0 -> {r} and the two multiplications {l0,l1} -> {l},
/// {r0,r1} -> {r}.
std::vector<EnvBMMorphism> envbm_generators();

/// Closure of the generators together with identities and part-respecting
/// bijections under tensor and composition, over objects of total size
/// <= size_bound, compared against envbm_hom. Throws GenerationGap on an
/// unreachable morphism.
bool envbm_generation_check(std::size_t size_bound);

// ---------------------------------------------------------------------------
// Evaluation into cospans: objects go to tensor powers of the supplied
// carriers, generators to the supplied structure cospans.
// ---------------------------------------------------------------------------

struct BimoduleTarget {
  FinSet carrier_left;    // A
  FinSet carrier_module;  // M
  FinSet carrier_right;   // B
  std::optional<Cospan> unit_left;   // 0 -/-> A
  std::optional<Cospan> mult_left;   // A+A -/-> A
  std::optional<Cospan> unit_right;  // 0 -/-> B
  std::optional<Cospan> mult_right;  // B+B -/-> B
  std::optional<Cospan> biaction;    // (A+M)+B -/-> M
};

/// Target data with all structure maps taken from the canonical algebra on
/// one carrier (A = M = B).
BimoduleTarget canonical_bimodule_target(const FinSet& carrier);

/// Evaluation of an object: one carrier copy per element, with labels
/// "<element>/<carrier label>".
FinSet evaluate_object(const BimoduleTarget& t, const EnvBMObject& x);

/// Evaluation of a valid morphism via its fiber decomposition; every fiber
/// is an ordered fold of generator images. Throws MissingGeneratorImage if
/// the target data lacks a needed structure cospan.
Cospan evaluate_bimodule(const BimoduleTarget& t, const EnvBMMorphism& m);

}  // namespace cospans
