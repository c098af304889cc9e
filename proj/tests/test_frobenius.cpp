#include <doctest.h>

#include "cospans/enumerate.hpp"
#include "cospans/frobenius.hpp"

using namespace cospans;

namespace {

FinSet sized(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet::make(std::move(labels));
}

}  // namespace

TEST_CASE("canonical algebras carry all witness cells") {
  SUBCASE("empty carrier degenerates to identities") {
    AlgebraDatum d = canonical_algebra(FinSet{});
    CHECK(d.unit == identity_cospan(FinSet{}));
    CHECK(d.mult == identity_cospan(FinSet{}));
    CHECK(d.witnesses.complete());
  }

  SUBCASE("singleton carrier") {
    AlgebraDatum d = canonical_algebra(make_set({"a"}));
    CHECK(d.mult.apex == make_set({"a"}));
    REQUIRE(d.witnesses.left_unitality.has_value());
    CHECK(is_bijection(d.witnesses.left_unitality->map));
  }

  SUBCASE("two elements: both association orders hit the ternary fold") {
    FinSet a = sized("x", 2);
    AlgebraDatum d = canonical_algebra(a);
    CHECK(d.witnesses.complete());

    Cospan id_a = identity_cospan(a);
    Cospan lhs = hcompose(d.mult, tensor(d.mult, id_a));
    Cospan rhs = hcompose(hcompose(d.mult, tensor(id_a, d.mult)),
                          right_way(associator_fn(a, a, a)));
    CHECK(lhs.apex.size() == 2);
    CHECK(rhs.apex.size() == 2);

    // Ternary fold on the left-associated bracketing.
    Coproduct aa = coproduct(a, a);
    Coproduct aaa = coproduct(aa.sum, a);
    std::vector<std::size_t> tern(aaa.sum.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      tern[aaa.inj1.at_index(aa.inj1.at_index(i))] = i;
      tern[aaa.inj1.at_index(aa.inj2.at_index(i))] = i;
      tern[aaa.inj2.at_index(i)] = i;
    }
    Cospan fold3 = right_way(FinFn::from_indices(aaa.sum, a, tern));
    CHECK(find_two_iso(lhs, fold3).has_value());
    CHECK(find_two_iso(rhs, fold3).has_value());
  }
}

TEST_CASE("counit and comultiplication are mirrors of the structure maps") {
  FinSet a = make_set({"a"});
  AlgebraDatum d = canonical_algebra(a);
  CHECK(counit_of(d) == Cospan::make(a, FinSet{}, a, FinFn::identity(a),
                                     FinFn::empty_to(a)));
  CHECK(comult_of(d) == wrong_way(fold_fn(a)));

  AlgebraDatum empty = canonical_algebra(FinSet{});
  CHECK(counit_of(empty) == identity_cospan(FinSet{}));

  FinSet a2 = sized("x", 2);
  CHECK(comult_of(canonical_algebra(a2)) == wrong_way(fold_fn(a2)));

  SUBCASE("a non-left-adjoint unit is rejected") {
    FinSet padded = coproduct(a, make_set({"pad"})).sum;
    Cospan bad_unit = Cospan::make(FinSet{}, a, padded, FinFn::empty_to(padded),
                                   FinFn::constant(a, padded, "L.a"));
    AlgebraDatum bad = d;
    bad.unit = bad_unit;
    CHECK_THROWS_AS(counit_of(bad), NotRigidCandidate);
  }
}

TEST_CASE("Frobenius counitality") {
  for (std::size_t n = 0; n <= 3; ++n) {
    FrobeniusReport r = verify_frobenius(canonical_algebra(sized("x", n)));
    CHECK(r.ok);
    if (r.ok) {
      CHECK(is_bijection(r.datum->left_counitality.map));
      CHECK(is_bijection(r.datum->right_counitality.map));
    }
  }

  SUBCASE("a comultiplication with the wrong apex size fails") {
    FinSet a = sized("x", 2);
    AlgebraDatum d = canonical_algebra(a);
    Coproduct aa = coproduct(a, a);
    FinSet padded = coproduct(a, make_set({"pad"})).sum;
    FinFn into = coproduct(a, make_set({"pad"})).inj1;
    Cospan bad_comult = Cospan::make(a, aa.sum, padded, into,
                                     compose_fn(into, fold_fn(a)));
    FrobeniusReport r = verify_frobenius_with(d, counit_of(d), bad_comult);
    CHECK_FALSE(r.ok);
    CHECK(r.failure.find("CounitalityFailed") == 0);
  }
}

TEST_CASE("self-duality zigzags") {
  SUBCASE("singleton: all apexes collapse to a point") {
    DualityData d = self_duality(make_set({"a"}));
    CHECK(d.ev.apex.size() == 1);
    CHECK(d.zigzag_left.from.apex.size() == 1);
    CHECK(d.zigzag_right.from.apex.size() == 1);
  }

  SUBCASE("empty object: everything degenerates") {
    DualityData d = self_duality(FinSet{});
    CHECK(d.ev.apex.empty());
    CHECK(d.zigzag_left.map.dom().empty());
  }

  SUBCASE("zigzag witnesses are bijections through size 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
      DualityData d = self_duality(sized("x", n));
      CHECK(is_bijection(d.zigzag_left.map));
      CHECK(is_bijection(d.zigzag_right.map));
      CHECK(d.coev == mirror(d.ev));
    }
  }
}

TEST_CASE("transpose through the self-dualities is the mirror") {
  Lcg rng(5);
  std::map<FinSet, DualityData> cache;
  auto dual = [&cache](const FinSet& s) -> const DualityData& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, self_duality(s)).first;
    return it->second;
  };

  for (int i = 0; i < 60; ++i) {
    Cospan c = random_cospan(rng, 4);
    Cospan t = transpose_general(c, dual(c.src), dual(c.tgt));
    CHECK(find_two_iso(t, mirror(c)).has_value());

    // Double transpose comes back to the original.
    Cospan tt = transpose_general(t, dual(t.src), dual(t.tgt));
    CHECK(find_two_iso(tt, c).has_value());
  }

  FinSet a = sized("x", 2);
  Cospan id_a = identity_cospan(a);
  CHECK(find_two_iso(transpose_general(id_a, dual(a), dual(a)), id_a).has_value());
}

TEST_CASE("adjoint-to-transpose for plain functions") {
  for (std::size_t na = 0; na <= 2; ++na) {
    FinSet a = sized("a", na);
    for (std::size_t nb = 0; nb <= 2; ++nb) {
      FinSet b = sized("b", nb);
      for (const FinFn& f : enumerate_functions(a, b)) {
        CHECK(verify_adjoint_to_transpose(f));
      }
    }
  }
  CHECK(verify_adjoint_to_transpose(FinFn::identity(sized("a", 3))));
  CHECK(verify_adjoint_to_transpose(FinFn::empty_to(sized("a", 3))));
}

TEST_CASE("projection formula cell") {
  SUBCASE("empty carrier gives the identity cell") {
    TwoCell cell = projection_formula_cell(canonical_algebra(FinSet{}));
    CHECK(cell.from == cell.to);
    CHECK(cell == identity_cell(cell.from));
  }

  for (std::size_t n = 1; n <= 3; ++n) {
    TwoCell cell = projection_formula_cell(canonical_algebra(sized("x", n)));
    CHECK(is_invertible_cell(cell));
  }

  SUBCASE("a non-left-adjoint multiplication is rejected") {
    FinSet a = sized("x", 2);
    AlgebraDatum d = canonical_algebra(a);
    // Redirect the wrong-way leg onto a single apex point.
    d.mult = Cospan::make(d.mult.src, a, a, d.mult.left,
                          FinFn::constant(a, a, "x0"));
    CHECK_THROWS_AS(projection_formula_cell(d), NotLeftAdjoint);
  }
}

TEST_CASE("rigidity verdicts") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(verify_rigid(canonical_algebra(sized("x", n))).ok);
  }

  SUBCASE("padding the unit apex kills left adjointness") {
    FinSet a = sized("x", 2);
    AlgebraDatum d = canonical_algebra(a);
    FinSet padded = coproduct(a, make_set({"pad"})).sum;
    FinFn incl = coproduct(a, make_set({"pad"})).inj1;
    d.unit = Cospan::make(FinSet{}, a, padded, FinFn::empty_to(padded), incl);
    RigidReport r = verify_rigid(d);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.unit_left_adjoint);
    CHECK(r.mult_left_adjoint);
  }
}

TEST_CASE("classification of unital multiplications") {
  SUBCASE("singleton carrier, apex bound 2") {
    auto sols = classify_unital_multiplications(make_set({"a"}), 2);
    CHECK(!sols.empty());
    for (const auto& s : sols) {
      CHECK(is_bijection(s.iso_to_fold.map));
      CHECK(s.mult.apex.size() == 1);
    }
  }

  SUBCASE("empty carrier admits only the empty multiplication") {
    auto sols = classify_unital_multiplications(FinSet{}, 3);
    REQUIRE(sols.size() == 1);
    CHECK(sols.front().mult == identity_cospan(FinSet{}));
  }

  SUBCASE("two-element carrier: solutions differ from the fold by apex bijections") {
    FinSet a = sized("x", 2);
    auto sols = classify_unital_multiplications(a, 3);
    CHECK(!sols.empty());
    for (const auto& s : sols) {
      CHECK(s.mult.apex.size() == a.size());
      CHECK(is_bijection(s.mult.right));
      CHECK(is_bijection(s.iso_to_fold.map));
    }
  }
}

TEST_CASE("canonical algebras hit every classified solution") {
  // Unit instance of the main adjunction: the canonical algebra construction
  // is injective on carriers up to 2-iso and surjective onto the classified
  // unital multiplications.
  for (std::size_t n = 0; n <= 2; ++n) {
    FinSet a = sized("x", n);
    AlgebraDatum canon = canonical_algebra(a);
    for (const auto& s : classify_unital_multiplications(a, 3)) {
      CHECK(find_two_iso(s.mult, canon.mult).has_value());
    }
  }
  // Distinct carrier sizes are never identified.
  CHECK(canonical_algebra(sized("x", 1)).mult.apex.size() !=
        canonical_algebra(sized("y", 2)).mult.apex.size());
}
