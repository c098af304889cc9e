#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospans {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DuplicateLabel : Error {
  explicit DuplicateLabel(const std::string& m) : Error("DuplicateLabel: " + m) {}
};
struct TypeMismatch : Error {
  explicit TypeMismatch(const std::string& m) : Error("TypeMismatch: " + m) {}
};
struct NotACocone : Error {
  explicit NotACocone(const std::string& m) : Error("NotACocone: " + m) {}
};
struct NotParallel : Error {
  explicit NotParallel(const std::string& m) : Error("NotParallel: " + m) {}
};
struct NotLeftAdjoint : Error {
  explicit NotLeftAdjoint(const std::string& m) : Error("NotLeftAdjoint: " + m) {}
};
struct NotCommuting : Error {
  explicit NotCommuting(const std::string& m) : Error("NotCommuting: " + m) {}
};
struct NotRigidCandidate : Error {
  explicit NotRigidCandidate(const std::string& m) : Error("NotRigidCandidate: " + m) {}
};
struct ClassificationCounterexample : Error {
  explicit ClassificationCounterexample(const std::string& m)
      : Error("ClassificationCounterexample: " + m) {}
};
struct GenerationGap : Error {
  explicit GenerationGap(const std::string& m) : Error("GenerationGap: " + m) {}
};
struct MissingGeneratorImage : Error {
  explicit MissingGeneratorImage(const std::string& m)
      : Error("MissingGeneratorImage: " + m) {}
};
struct SimplicialIdentityFailure : Error {
  explicit SimplicialIdentityFailure(const std::string& m)
      : Error("SimplicialIdentityFailure: " + m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError: " + m) {}
};
struct UnknownName : Error {
  explicit UnknownName(const std::string& m) : Error("UnknownName: " + m) {}
};

// ---------------------------------------------------------------------------
// FinSet: a finite set of distinct string labels in canonical (sorted) order.
// ---------------------------------------------------------------------------

class FinSet {
 public:
  FinSet() = default;

  /// Canonicalizes (sorts) the labels; rejects duplicates.
  static FinSet make(std::vector<std::string> labels);

  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(const std::string& label) const;
  /// Index of a label in canonical order; throws UnknownName if absent.
  std::size_t index_of(const std::string& label) const;
  const std::string& label(std::size_t i) const { return elements_.at(i); }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<std::string> elements_;  // sorted, pairwise distinct
};

/// Spec-level constructor name.
FinSet make_set(std::vector<std::string> labels);

// ---------------------------------------------------------------------------
// FinFn: a total function between finite sets, stored as an index mapping.
// ---------------------------------------------------------------------------

class FinFn {
 public:
  FinFn() = default;

  static FinFn make(FinSet dom, FinSet cod,
                    const std::map<std::string, std::string>& label_map);
  /// indices[i] = index in cod of the image of dom.label(i).
  static FinFn from_indices(FinSet dom, FinSet cod, std::vector<std::size_t> indices);
  static FinFn identity(FinSet a);
  static FinFn empty_to(FinSet cod);
  /// The unique map to a singleton.
  static FinFn constant(FinSet dom, FinSet cod, const std::string& value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  std::size_t at_index(std::size_t i) const { return indices_.at(i); }
  const std::string& operator()(const std::string& label) const;
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::map<std::string, std::string> as_label_map() const;

  friend bool operator==(const FinFn&, const FinFn&) = default;
  friend auto operator<=>(const FinFn&, const FinFn&) = default;

 private:
  FinSet dom_, cod_;
  std::vector<std::size_t> indices_;
};

/// g after f; boundaries must agree exactly.
FinFn compose_fn(const FinFn& g, const FinFn& f);

bool is_bijection(const FinFn& f);
bool is_injective(const FinFn& f);
bool is_surjective(const FinFn& f);
/// Inverse of a bijection; throws TypeMismatch otherwise.
FinFn invert(const FinFn& f);

// ---------------------------------------------------------------------------
// Coproduct: disjoint union with "L."/"R." label disambiguation.
// ---------------------------------------------------------------------------

struct Coproduct {
  FinSet sum;
  FinFn inj1;  // A -> sum, x -> "L."x
  FinFn inj2;  // B -> sum, x -> "R."x
};

Coproduct coproduct(const FinSet& a, const FinSet& b);

/// f + g : A + B -> C + D, acting as f on the L part and g on the R part.
FinFn coproduct_fn(const FinFn& f, const FinFn& g);

/// Fold map A + A -> A (both injections composed to the identity).
FinFn fold_fn(const FinSet& a);

/// Copairing [h1, h2] : A + B -> Q.
FinFn copair_fn(const FinFn& h1, const FinFn& h2);

// Coherence bijections for the coproduct monoidal structure.
FinFn unitor_left_fn(const FinSet& a);    // 0 + A -> A
FinFn unitor_right_fn(const FinSet& a);   // A + 0 -> A
FinFn associator_fn(const FinSet& a, const FinSet& b, const FinSet& c);  // (A+B)+C -> A+(B+C)
FinFn symmetry_fn(const FinSet& a, const FinSet& b);  // A+B -> B+A

// ---------------------------------------------------------------------------
// Pushout of f : A -> B and g : A -> C, computed with a union-find structure.
// Class representatives are the first occurrence in the B-then-C concatenation.
// ---------------------------------------------------------------------------

struct Pushout {
  FinSet apex;
  FinFn p1;  // B -> apex
  FinFn p2;  // C -> apex
};

Pushout pushout(const FinFn& f, const FinFn& g);

/// Mediating map for a candidate cocone (p1, p2) against a probe cocone
/// (h1, h2) over the same span (f, g). Returns the unique u with
/// u . p1 = h1 and u . p2 = h2, or nothing if no such unique map exists.
/// Throws NotACocone when either pair fails to commute over (f, g).
std::optional<FinFn> verify_pushout_universal(const FinFn& f, const FinFn& g,
                                              const FinFn& p1, const FinFn& p2,
                                              const FinFn& h1, const FinFn& h2);

// ---------------------------------------------------------------------------
// Deterministic enumeration streams.
// ---------------------------------------------------------------------------

/// [ {}, {x0}, {x0,x1}, ... ] up to max_size.
std::vector<FinSet> enumerate_sets(std::size_t max_size);

/// All functions A -> B in lexicographic order of their index vectors.
std::vector<FinFn> enumerate_functions(const FinSet& a, const FinSet& b);

}  // namespace cospans
