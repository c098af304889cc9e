#include <doctest.h>

#include "cospans/adjoint.hpp"
#include "cospans/bar.hpp"
#include "cospans/enumerate.hpp"
#include "oracles.hpp"

using namespace cospans;

namespace {

FinFn point_into_pair() {
  return FinFn::make(make_set({"a"}), make_set({"b0", "b1"}), {{"a", "b0"}});
}

}  // namespace

TEST_CASE("the left-adjoint test reads the wrong-way leg") {
  FinFn f = point_into_pair();
  CHECK(is_left_adjoint(right_way(f)));
  CHECK_FALSE(is_left_adjoint(wrong_way(f)));  // f is not a bijection
  CHECK(is_left_adjoint(identity_cospan(make_set({"a", "b"}))));
}

TEST_CASE("construct_right_adjoint builds the mirror witness") {
  FinFn f = point_into_pair();
  AdjunctionWitness w = construct_right_adjoint(right_way(f));
  CHECK(w.right == wrong_way(f));
  CHECK(w.counit.from.apex.size() == 3);  // two copies of B glued over A
  CHECK(is_surjective(w.counit.map));
  CHECK(verify_adjunction(w).ok);

  SUBCASE("identities are self-adjoint") {
    Cospan id_c = identity_cospan(make_set({"a"}));
    AdjunctionWitness wi = construct_right_adjoint(id_c);
    CHECK(wi.right == id_c);
    CHECK(is_bijection(wi.unit.map));
    CHECK(is_bijection(wi.counit.map));
    CHECK(verify_adjunction(wi).ok);
  }

  SUBCASE("the algebra unit's right adjoint is its mirror") {
    FinSet a = make_set({"a0", "a1"});
    AdjunctionWitness wu = construct_right_adjoint(right_way(FinFn::empty_to(a)));
    CHECK(wu.right == wrong_way(FinFn::empty_to(a)));
    CHECK(verify_adjunction(wu).ok);
  }

  CHECK_THROWS_AS(construct_right_adjoint(wrong_way(f)), NotLeftAdjoint);
}

TEST_CASE("verify_adjunction detects perturbed witnesses") {
  FinSet a = make_set({"x0", "x1"});
  Cospan l = identity_cospan(a);

  // A padded candidate right adjoint: the apex carries a junk element, the
  // unit exists, and every counit choice breaks one triangle.
  FinSet padded = coproduct(a, make_set({"junk"})).sum;
  FinFn incl = FinFn::from_indices(a, padded, {0, 1});
  Cospan r_bad = Cospan::make(a, a, padded, incl, incl);

  Cospan d = hcompose(r_bad, l);
  REQUIRE(d.left == d.right);
  TwoCell unit = TwoCell::make(identity_cospan(a), d, d.left);

  Cospan e = hcompose(l, r_bad);
  for (std::size_t junk_to = 0; junk_to < a.size(); ++junk_to) {
    std::vector<std::size_t> m(e.apex.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m[e.left.at_index(i)] = i;
      m[e.right.at_index(i)] = i;
    }
    for (std::size_t i = 0; i < e.apex.size(); ++i) {
      bool forced = false;
      for (std::size_t j = 0; j < a.size(); ++j) {
        forced |= (e.left.at_index(j) == i) || (e.right.at_index(j) == i);
      }
      if (!forced) m[i] = junk_to;
    }
    TwoCell counit = TwoCell::make(e, identity_cospan(a),
                                   FinFn::from_indices(e.apex, a, m));
    ZigzagReport report = verify_adjunction({l, r_bad, unit, counit});
    CHECK_FALSE(report.ok);
    CHECK(report.left_triangle_ok);
    CHECK_FALSE(report.right_triangle_ok);
    CHECK(!report.detail.empty());
  }

  SUBCASE("the degenerate empty identity is self-adjoint") {
    AdjunctionWitness w = construct_right_adjoint(identity_cospan(FinSet{}));
    CHECK(verify_adjunction(w).ok);
  }
}

TEST_CASE("search_adjoint finds witnesses and reports bounded absence") {
  FinFn f = point_into_pair();

  SUBCASE("right-way maps are found") {
    auto w = search_adjoint(right_way(f), default_apex_bound(right_way(f)));
    REQUIRE(w.has_value());
    CHECK(verify_adjunction(*w).ok);
    // Uniqueness up to 2-iso against the constructed witness.
    AdjunctionWitness canon = construct_right_adjoint(right_way(f));
    CHECK(find_two_iso(w->right, canon.right).has_value());
  }

  SUBCASE("non-bijective wrong-way legs admit no witness within bound 5") {
    CHECK_FALSE(search_adjoint(wrong_way(f), 5).has_value());
  }

  SUBCASE("identity found with a singleton apex") {
    auto w = search_adjoint(identity_cospan(make_set({"a"})), 1);
    REQUIRE(w.has_value());
    CHECK(w->right.apex.size() == 1);
  }
}

TEST_CASE("decision procedure agrees with the bounded search at size 2") {
  for (const Cospan& c : enumerate_cospans(2)) {
    CHECK(is_left_adjoint(c) == search_adjoint(c, 6).has_value());
  }
}

TEST_CASE("Beck-Chevalley cells") {
  FinSet a = make_set({"a0"});
  FinSet b = make_set({"b0", "b1"});
  FinSet c = make_set({"c0"});
  FinFn f = FinFn::make(a, b, {{"a0", "b0"}});
  FinFn g = FinFn::make(a, c, {{"a0", "c0"}});
  Pushout po = pushout(f, g);

  SUBCASE("genuine pushout squares give bijective cells") {
    CommutingSquare sq = CommutingSquare::make(f, g, po.p1, po.p2);
    TwoCell cell = beck_chevalley_cell(sq);
    CHECK(is_invertible_cell(cell));
    CHECK(verify_cobase_change(sq));
  }

  SUBCASE("padding the corner breaks surjectivity") {
    FinSet padded = coproduct(po.apex, make_set({"junk"})).sum;
    FinFn inj = coproduct(po.apex, make_set({"junk"})).inj1;
    CommutingSquare sq = CommutingSquare::make(f, g, compose_fn(inj, po.p1),
                                               compose_fn(inj, po.p2));
    TwoCell cell = beck_chevalley_cell(sq);
    CHECK_FALSE(is_surjective(cell.map));
    CHECK_FALSE(verify_cobase_change(sq));
    (void)padded;
  }

  SUBCASE("the degenerate identity square gives the identity cell") {
    FinFn id_a = FinFn::identity(a);
    CommutingSquare sq = CommutingSquare::make(id_a, id_a, id_a, id_a);
    TwoCell cell = beck_chevalley_cell(sq);
    CHECK(cell.from == cell.to);
    CHECK(cell == identity_cell(cell.from));
  }

  SUBCASE("the double-fold square from the rigidity argument") {
    CHECK(verify_cobase_change(double_fold_square(make_set({"x0", "x1"}))));
  }

  SUBCASE("a commuting non-pushout square is rejected") {
    // Send both copies to the same point: commutes, but collapses too much.
    FinSet one = make_set({"*"});
    CommutingSquare sq = CommutingSquare::make(f, g, FinFn::constant(b, one, "*"),
                                               FinFn::constant(c, one, "*"));
    CHECK_FALSE(verify_cobase_change(sq));
  }

  CHECK_THROWS_AS(CommutingSquare::make(f, g, po.p2, po.p1), TypeMismatch);
}

TEST_CASE("cell invertibility matches the pushout universal property") {
  Lcg rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t na = rng.below(4), nb = 1 + rng.below(3), nc = 1 + rng.below(3);
    std::vector<std::string> al, bl, cl;
    for (std::size_t i = 0; i < na; ++i) al.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < nb; ++i) bl.push_back("b" + std::to_string(i));
    for (std::size_t i = 0; i < nc; ++i) cl.push_back("c" + std::to_string(i));
    FinSet a = make_set(al), b = make_set(bl), c = make_set(cl);
    std::vector<std::size_t> fi(na), gi(na);
    for (auto& v : fi) v = rng.below(nb);
    for (auto& v : gi) v = rng.below(nc);
    FinFn f = FinFn::from_indices(a, b, fi);
    FinFn g = FinFn::from_indices(a, c, gi);
    Pushout po = pushout(f, g);

    // Candidate corner: sometimes the true pushout, sometimes a quotient.
    bool honest = rng.below(2) == 0;
    FinFn gp = po.p1, fp = po.p2;
    if (!honest && po.apex.size() >= 2) {
      // Collapse the apex to a point.
      FinSet one = make_set({"*"});
      gp = FinFn::constant(b, one, "*");
      fp = FinFn::constant(c, one, "*");
    }
    CommutingSquare sq = CommutingSquare::make(f, g, gp, fp);

    auto med = verify_pushout_universal(f, g, po.p1, po.p2, gp, fp);
    bool universal = med.has_value() && is_bijection(*med);
    CHECK(verify_cobase_change(sq) == universal);
  }
}
