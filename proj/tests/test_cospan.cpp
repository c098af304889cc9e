#include <doctest.h>

#include "cospans/cospan.hpp"
#include "cospans/enumerate.hpp"
#include "oracles.hpp"

using namespace cospans;

namespace {

Cospan sample_cospan() {
  FinSet a = make_set({"a0", "a1"});
  FinSet b = make_set({"b0"});
  FinSet x = make_set({"x0", "x1", "x2"});
  return Cospan::make(a, b, x,
                      FinFn::make(a, x, {{"a0", "x0"}, {"a1", "x1"}}),
                      FinFn::make(b, x, {{"b0", "x1"}}));
}

}  // namespace

TEST_CASE("identity cospans and right-way normal forms") {
  CHECK(identity_cospan(FinSet{}).apex.empty());

  FinSet a = make_set({"a"});
  Cospan id_a = identity_cospan(a);
  CHECK(id_a.apex == a);
  CHECK(id_a.left == FinFn::identity(a));

  CHECK(right_way(FinFn::identity(a)) == id_a);

  FinSet b = make_set({"b0", "b1"});
  FinFn f = FinFn::make(a, b, {{"a", "b0"}});
  Cospan w = wrong_way(f);
  CHECK(w.src == b);
  CHECK(w.tgt == a);
  CHECK(w.apex == b);
  CHECK(w.left == FinFn::identity(b));
  CHECK(w.right == f);
}

TEST_CASE("horizontal composition through pushouts") {
  FinSet a = make_set({"a"});
  FinSet b = make_set({"b0", "b1"});
  FinFn f = FinFn::make(a, b, {{"a", "b0"}});

  SUBCASE("wrong_way(f) . right_way(f) has apex B with equal legs") {
    Cospan comp = hcompose(wrong_way(f), right_way(f));
    CHECK(comp.src == a);
    CHECK(comp.tgt == a);
    CHECK(comp.apex.size() == b.size());
    CHECK(comp.left == comp.right);
  }

  SUBCASE("right_way(f) . wrong_way(f) glues two copies of B over A") {
    Cospan comp = hcompose(right_way(f), wrong_way(f));
    CHECK(comp.apex.size() == 3);
  }

  SUBCASE("composition with identities, up to the unitor cells") {
    Cospan c = sample_cospan();
    TwoCell ru = runitor(c);
    CHECK(ru.from == hcompose(c, identity_cospan(c.src)));
    CHECK(ru.to == c);
    CHECK(is_invertible_cell(ru));
    TwoCell lu = lunitor(c);
    CHECK(lu.from == hcompose(identity_cospan(c.tgt), c));
    CHECK(is_invertible_cell(lu));
  }

  CHECK_THROWS_AS(hcompose(right_way(f), right_way(f)), TypeMismatch);
}

TEST_CASE("right-way composition is functorial up to 2-iso") {
  FinSet a = make_set({"a0", "a1"});
  FinSet b = make_set({"b0", "b1", "b2"});
  FinSet c = make_set({"c0"});
  for (const FinFn& f : enumerate_functions(a, b)) {
    for (const FinFn& g : enumerate_functions(b, c)) {
      Cospan composite = hcompose(right_way(g), right_way(f));
      Cospan direct = right_way(compose_fn(g, f));
      auto iso = find_two_iso(composite, direct);
      REQUIRE(iso.has_value());
      auto all = oracles::exhaustive_two_isos(composite, direct);
      CHECK(!all.empty());
      CHECK(std::find(all.begin(), all.end(), *iso) != all.end());
    }
  }
}

TEST_CASE("tensor structure") {
  Cospan c = sample_cospan();

  SUBCASE("tensoring with the empty identity relabels only") {
    Cospan t = tensor(c, identity_cospan(FinSet{}));
    CHECK(t.apex.size() == c.apex.size());
    CHECK(find_two_iso(reindex_boundaries(t, unitor_right_fn(c.src),
                                          unitor_right_fn(c.tgt)),
                       c)
              .has_value());
  }

  SUBCASE("tensor of right-way maps is the right-way map of the coproduct") {
    FinSet a = make_set({"a"});
    FinSet b = make_set({"b0", "b1"});
    FinFn f = FinFn::make(a, b, {{"a", "b1"}});
    FinFn g = fold_fn(a);
    CHECK(tensor(right_way(f), right_way(g)) == right_way(coproduct_fn(f, g)));
  }

  SUBCASE("symmetry of the tensor") {
    Cospan d = identity_cospan(make_set({"u"}));
    Cospan swapped = reindex_boundaries(tensor(d, c), symmetry_fn(d.src, c.src),
                                        symmetry_fn(d.tgt, c.tgt));
    CHECK(find_two_iso(tensor(c, d), swapped).has_value());
  }

  SUBCASE("tensor of identity cospans is the identity of the coproduct") {
    FinSet a = make_set({"a"});
    FinSet b = make_set({"b"});
    CHECK(tensor(identity_cospan(a), identity_cospan(b)) ==
          identity_cospan(coproduct(a, b).sum));
  }
}

TEST_CASE("mirror is a strict involution") {
  Cospan c = sample_cospan();
  CHECK(mirror(mirror(c)) == c);
  CHECK(mirror(identity_cospan(c.src)) == identity_cospan(c.src));

  FinSet a = make_set({"a"});
  FinFn f = FinFn::make(a, make_set({"b"}), {{"a", "b"}});
  CHECK(mirror(right_way(f)) == wrong_way(f));

  SUBCASE("mirror reverses horizontal composition up to 2-iso") {
    Lcg rng(3);
    for (int i = 0; i < 30; ++i) {
      Cospan c1 = random_cospan(rng, 3);
      Cospan c2 = random_cospan(rng, 3);
      // Align boundaries: reuse c1's target as c2's source by relabeling.
      if (c2.src.size() != c1.tgt.size()) continue;
      std::vector<std::size_t> ix(c2.src.size());
      for (std::size_t k = 0; k < ix.size(); ++k) ix[k] = k;
      Cospan c2a = reindex_boundaries(
          c2, FinFn::from_indices(c2.src, c1.tgt, ix), FinFn::identity(c2.tgt));
      CHECK(find_two_iso(mirror(hcompose(c2a, c1)),
                         hcompose(mirror(c1), mirror(c2a)))
                .has_value());
    }
  }
}

TEST_CASE("vertical composition and whiskering") {
  Cospan c = sample_cospan();
  TwoCell id_cell = identity_cell(c);
  CHECK(vcompose(id_cell, id_cell) == id_cell);

  SUBCASE("whiskering an identity cell gives an identity cell") {
    Cospan g = identity_cospan(c.tgt);
    TwoCell w = whisker_left(g, id_cell);
    CHECK(w.from == w.to);
    CHECK(w == identity_cell(w.from));
    TwoCell w2 = whisker_right(identity_cell(g), c);
    CHECK(w2 == identity_cell(w2.from));
  }

  SUBCASE("interchange: the two pasting orders agree exactly") {
    Lcg rng(23);
    int done = 0;
    for (int i = 0; done < 20 && i < 300; ++i) {
      Cospan c1 = random_cospan(rng, 3);
      Cospan c2 = random_cospan(rng, 3);
      if (c1.tgt != c2.src) continue;
      // Random parallel mates with cells onto them.
      auto alpha = find_two_iso(c1, c1);
      auto beta = find_two_iso(c2, c2);
      REQUIRE(alpha.has_value());
      REQUIRE(beta.has_value());
      TwoCell one = vcompose(whisker_right(*beta, alpha->to), whisker_left(beta->from, *alpha));
      TwoCell two = vcompose(whisker_left(beta->to, *alpha), whisker_right(*beta, alpha->from));
      CHECK(one == two);
      CHECK(hcompose_cells(*beta, *alpha) == one);
      ++done;
    }
    CHECK(done == 20);
  }
}

TEST_CASE("invertibility of 2-cells") {
  Cospan c = sample_cospan();
  CHECK(is_invertible_cell(identity_cell(c)));

  FinSet a = make_set({"a0", "a1"});
  Cospan from = Cospan::make(FinSet{}, FinSet{}, coproduct(a, a).sum,
                             FinFn::empty_to(coproduct(a, a).sum),
                             FinFn::empty_to(coproduct(a, a).sum));
  Cospan to = Cospan::make(FinSet{}, FinSet{}, a, FinFn::empty_to(a), FinFn::empty_to(a));
  TwoCell fold_cell = TwoCell::make(from, to, fold_fn(a));
  CHECK_FALSE(is_invertible_cell(fold_cell));
  CHECK_THROWS_AS(invert_cell(fold_cell), TypeMismatch);

  TwoCell inv = invert_cell(runitor(c));
  CHECK(vcompose(runitor(c), inv) == identity_cell(c));
}

TEST_CASE("find_two_iso is a decision procedure for 2-isomorphism") {
  Cospan c = sample_cospan();
  auto self_iso = find_two_iso(c, c);
  REQUIRE(self_iso.has_value());
  CHECK(*self_iso == identity_cell(c));

  SUBCASE("apex size mismatch means absence") {
    Cospan bigger = Cospan::make(
        c.src, c.tgt, coproduct(c.apex, make_set({"extra"})).sum,
        compose_fn(coproduct(c.apex, make_set({"extra"})).inj1, c.left),
        compose_fn(coproduct(c.apex, make_set({"extra"})).inj1, c.right));
    CHECK_FALSE(find_two_iso(c, bigger).has_value());
  }

  SUBCASE("non-parallel comparison is an error") {
    CHECK_THROWS_AS(find_two_iso(c, mirror(c)), NotParallel);
  }

  SUBCASE("agreement with the exhaustive bijection oracle") {
    std::vector<Cospan> all = enumerate_cospans(2);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (all[i].src != all[j].src || all[i].tgt != all[j].tgt) continue;
        auto found = find_two_iso(all[i], all[j]);
        auto oracle = oracles::exhaustive_two_isos(all[i], all[j]);
        CHECK(found.has_value() == !oracle.empty());
        if (found) {
          CHECK(std::find(oracle.begin(), oracle.end(), *found) != oracle.end());
        }
      }
    }
  }
}

TEST_CASE("associativity coherence: search result equals the constructed cell") {
  Lcg rng(31);
  int done = 0;
  for (int i = 0; done < 40 && i < 2000; ++i) {
    Cospan c1 = random_cospan(rng, 3);
    Cospan c2 = random_cospan(rng, 3);
    Cospan c3 = random_cospan(rng, 3);
    if (c1.tgt != c2.src || c2.tgt != c3.src) continue;
    Cospan lhs = hcompose(c3, hcompose(c2, c1));
    Cospan rhs = hcompose(hcompose(c3, c2), c1);
    TwoCell coherence = associator(c3, c2, c1);
    auto found = find_two_iso(lhs, rhs);
    REQUIRE(found.has_value());
    CHECK(*found == coherence);
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("interchange of tensor and composition") {
  Lcg rng(41);
  int done = 0;
  for (int i = 0; done < 25 && i < 2000; ++i) {
    Cospan c1 = random_cospan(rng, 2);
    Cospan c2 = random_cospan(rng, 2);
    Cospan d1 = random_cospan(rng, 2);
    Cospan d2 = random_cospan(rng, 2);
    if (c1.tgt != c2.src || d1.tgt != d2.src) continue;
    TwoCell swap = tensor_hcompose_interchange(c2, c1, d2, d1);
    CHECK(is_invertible_cell(swap));
    CHECK(swap.from == hcompose(tensor(c2, d2), tensor(c1, d1)));
    CHECK(swap.to == tensor(hcompose(c2, c1), hcompose(d2, d1)));
    ++done;
  }
  CHECK(done == 25);
}
