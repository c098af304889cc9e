#include <doctest.h>

#include "cospans/bar.hpp"
#include "cospans/enumerate.hpp"
#include "oracles.hpp"

using namespace cospans;

namespace {

FinSet sized(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet::make(std::move(labels));
}

}  // namespace

TEST_CASE("bar truncation shapes") {
  FinSet a = make_set({"a"});
  FinFn id_a = FinFn::identity(a);
  BarComplexTruncation t = bar_truncation(id_a, id_a, 1);

  CHECK(t.level_objects[0].size() == 2);  // B + C
  CHECK(t.level_objects[1].size() == 3);  // B + A + C
  CHECK(t.faces[1].size() == 2);
  CHECK(t.degeneracies[0].size() == 1);

  SUBCASE("over the empty base everything is an insertion collapse") {
    FinSet b = sized("b", 2);
    FinSet c = sized("c", 1);
    BarComplexTruncation e =
        bar_truncation(FinFn::empty_to(b), FinFn::empty_to(c), 3);
    for (std::size_t k = 0; k <= 3; ++k) {
      CHECK(e.level_objects[k].size() == 3);  // no algebra elements anywhere
    }
  }

  SUBCASE("simplicial identities hold at level 2 over small modules") {
    for (std::size_t na = 0; na <= 2; ++na) {
      FinSet base = sized("a", na);
      FinSet b = sized("b", 2), c = sized("c", 2);
      for (const FinFn& f : enumerate_functions(base, b)) {
        for (const FinFn& g : enumerate_functions(base, c)) {
          CHECK_NOTHROW(bar_truncation(f, g, 2));
        }
      }
    }
  }
}

TEST_CASE("pushout algebras") {
  SUBCASE("pushing out along an identity recovers the other algebra") {
    FinSet a = sized("a", 2);
    FinSet b = sized("b", 2);
    FinFn f = FinFn::make(a, b, {{"a0", "b0"}, {"a1", "b0"}});
    PushoutAlgebraResult p = pushout_algebra(f, FinFn::identity(a));
    CHECK(p.carrier.apex.size() == b.size());
    CHECK(p.rigid.ok);
    CHECK(p.square_commutes);
    // Same algebra as the canonical one on B, up to relabeling the carrier.
    CHECK(is_bijection(p.carrier.p1));
    CHECK(find_two_iso(reindex_boundaries(p.cocone_left, FinFn::identity(b),
                                          invert(p.carrier.p1)),
                       identity_cospan(b))
              .has_value());
  }

  SUBCASE("over the empty base the pushout is the coproduct") {
    FinSet b = sized("b", 1), c = sized("c", 2);
    PushoutAlgebraResult p =
        pushout_algebra(FinFn::empty_to(b), FinFn::empty_to(c));
    CHECK(p.carrier.apex.size() == 3);
    CHECK(p.rigid.ok);
  }

  SUBCASE("a genuine gluing stays rigid") {
    FinSet a = make_set({"a"});
    FinSet b = sized("b", 2), c = sized("c", 1);
    FinFn f = FinFn::make(a, b, {{"a", "b0"}});
    FinFn g = FinFn::make(a, c, {{"a", "c0"}});
    PushoutAlgebraResult p = pushout_algebra(f, g);
    CHECK(p.carrier.apex.size() == 2);
    CHECK(p.rigid.ok);
    CHECK(p.square_commutes);
  }
}

TEST_CASE("bar cocones commute with faces and degeneracies") {
  SUBCASE("identity legs give degenerate squares") {
    FinSet a = make_set({"a"});
    FinFn id_a = FinFn::identity(a);
    BarComplexTruncation t = bar_truncation(id_a, id_a, 3);
    CHECK(verify_bar_cocone(t, pushout_algebra(id_a, id_a)));
  }

  SUBCASE("small instances at level 2") {
    FinSet a = sized("a", 1), b = sized("b", 2), c = sized("c", 2);
    for (const FinFn& f : enumerate_functions(a, b)) {
      for (const FinFn& g : enumerate_functions(a, c)) {
        CHECK(verify_bar_cocone(bar_truncation(f, g, 2), pushout_algebra(f, g)));
      }
    }
  }

  SUBCASE("coproduct case over the empty base") {
    FinSet b = sized("b", 2), c = sized("c", 1);
    FinFn f = FinFn::empty_to(b), g = FinFn::empty_to(c);
    CHECK(verify_bar_cocone(bar_truncation(f, g, 3), pushout_algebra(f, g)));
  }
}

TEST_CASE("cobase change for the forgetful direction") {
  SUBCASE("sampled pushout squares up to size 4") {
    Lcg rng(13);
    for (int i = 0; i < 40; ++i) {
      std::size_t na = rng.below(5);
      std::size_t nb = na ? 1 + rng.below(4) : rng.below(5);
      std::size_t nc = na ? 1 + rng.below(4) : rng.below(5);
      FinSet a = sized("a", na), b = sized("b", nb), c = sized("c", nc);
      std::vector<std::size_t> fi(na), gi(na);
      for (auto& v : fi) v = rng.below(nb);
      for (auto& v : gi) v = rng.below(nc);
      CHECK(forgetful_cobase_change_check(FinFn::from_indices(a, b, fi),
                                          FinFn::from_indices(a, c, gi)));
    }
  }

  SUBCASE("degenerate identity square") {
    FinFn id_a = FinFn::identity(sized("a", 3));
    CHECK(forgetful_cobase_change_check(id_a, id_a));
  }

  SUBCASE("the double-fold square is a pushout square") {
    for (std::size_t n = 0; n <= 3; ++n) {
      CommutingSquare sq = double_fold_square(sized("x", n));
      CHECK(verify_cobase_change(sq));
      // Cross-check against the universal property oracle.
      Pushout po = pushout(sq.f, sq.g);
      auto med = verify_pushout_universal(sq.f, sq.g, po.p1, po.p2, sq.gp, sq.fp);
      REQUIRE(med.has_value());
      CHECK(is_bijection(*med));
      auto all = oracles::exhaustive_mediating(po.p1, po.p2, sq.gp, sq.fp);
      CHECK(all.size() == 1);
    }
  }
}
