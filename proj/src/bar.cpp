#include "cospans/bar.hpp"

namespace cospans {

namespace {

FinSet level_object(const FinSet& b, const FinSet& a, const FinSet& c, std::size_t k) {
  std::vector<std::string> labels;
  for (const auto& x : b.elements()) labels.push_back("m/" + x);
  for (std::size_t i = 1; i <= k; ++i) {
    for (const auto& x : a.elements()) {
      labels.push_back("a" + std::to_string(i) + "/" + x);
    }
  }
  for (const auto& x : c.elements()) labels.push_back("n/" + x);
  return FinSet::make(std::move(labels));
}

}  // namespace

BarComplexTruncation bar_truncation(const FinFn& f, const FinFn& g, std::size_t n) {
  if (f.dom() != g.dom()) {
    throw TypeMismatch("bar_truncation: the two algebra maps must share their source");
  }
  const FinSet& a = f.dom();
  const FinSet& b = f.cod();
  const FinSet& c = g.cod();

  BarComplexTruncation t{a, f, g, n, {}, {}, {}};
  for (std::size_t k = 0; k <= n; ++k) {
    t.level_objects.push_back(level_object(b, a, c, k));
  }
  t.faces.resize(n + 1);
  t.degeneracies.resize(n + 1);

  // Face d_i : level k -> level k-1 multiplies slots i and i+1 together
  // (module action at the ends, algebra multiplication in the middle).
  for (std::size_t k = 1; k <= n; ++k) {
    const FinSet& from = t.level_objects[k];
    const FinSet& to = t.level_objects[k - 1];
    for (std::size_t i = 0; i <= k; ++i) {
      std::map<std::string, std::string> fn;
      for (const auto& x : b.elements()) fn["m/" + x] = "m/" + x;
      for (const auto& x : c.elements()) fn["n/" + x] = "n/" + x;
      for (std::size_t j = 1; j <= k; ++j) {
        for (const auto& x : a.elements()) {
          std::string from_label = "a" + std::to_string(j) + "/" + x;
          if (i == 0) {
            fn[from_label] = (j == 1) ? "m/" + f(x) : "a" + std::to_string(j - 1) + "/" + x;
          } else if (i == k) {
            fn[from_label] = (j == k) ? "n/" + g(x) : "a" + std::to_string(j) + "/" + x;
          } else if (j <= i) {
            fn[from_label] = "a" + std::to_string(j) + "/" + x;
          } else if (j == i + 1) {
            fn[from_label] = "a" + std::to_string(i) + "/" + x;
          } else {
            fn[from_label] = "a" + std::to_string(j - 1) + "/" + x;
          }
        }
      }
      t.faces[k].push_back(right_way(FinFn::make(from, to, fn)));
    }
  }

  // Degeneracy s_i : level k -> level k+1 inserts the unit after slot i; no
  // elements are added, later algebra copies shift up.
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    const FinSet& from = t.level_objects[k];
    const FinSet& to = t.level_objects[k + 1];
    for (std::size_t i = 0; i <= k; ++i) {
      std::map<std::string, std::string> fn;
      for (const auto& x : b.elements()) fn["m/" + x] = "m/" + x;
      for (const auto& x : c.elements()) fn["n/" + x] = "n/" + x;
      for (std::size_t j = 1; j <= k; ++j) {
        for (const auto& x : a.elements()) {
          std::string to_slot = (j <= i) ? "a" + std::to_string(j)
                                         : "a" + std::to_string(j + 1);
          fn["a" + std::to_string(j) + "/" + x] = to_slot + "/" + x;
        }
      }
      t.degeneracies[k].push_back(right_way(FinFn::make(from, to, fn)));
    }
  }

  // Simplicial identities, up to 2-iso.
  auto expect_iso = [](const Cospan& lhs, const Cospan& rhs, const std::string& what) {
    if (!find_two_iso(lhs, rhs)) {
      throw SimplicialIdentityFailure(what);
    }
  };
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        expect_iso(hcompose(t.faces[k - 1][i], t.faces[k][j]),
                   hcompose(t.faces[k - 1][j - 1], t.faces[k][i]),
                   "d_i d_j = d_{j-1} d_i at level " + std::to_string(k));
      }
    }
  }
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        expect_iso(hcompose(t.degeneracies[k + 1][i], t.degeneracies[k][j]),
                   hcompose(t.degeneracies[k + 1][j + 1], t.degeneracies[k][i]),
                   "s_i s_j = s_{j+1} s_i at level " + std::to_string(k));
      }
    }
  }
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i <= k + 1; ++i) {
        Cospan lhs = hcompose(t.faces[k + 1][i], t.degeneracies[k][j]);
        if (i == j || i == j + 1) {
          expect_iso(lhs, identity_cospan(t.level_objects[k]),
                     "d_i s_j = id at level " + std::to_string(k));
        } else if (i < j) {
          expect_iso(lhs, hcompose(t.degeneracies[k - 1][j - 1], t.faces[k][i]),
                     "d_i s_j = s_{j-1} d_i at level " + std::to_string(k));
        } else {
          expect_iso(lhs, hcompose(t.degeneracies[k - 1][j], t.faces[k][i - 1]),
                     "d_i s_j = s_j d_{i-1} at level " + std::to_string(k));
        }
      }
    }
  }
  return t;
}

PushoutAlgebraResult pushout_algebra(const FinFn& f, const FinFn& g) {
  Pushout po = pushout(f, g);
  AlgebraDatum algebra = canonical_algebra(po.apex);
  Cospan cocone_left = right_way(po.p1);
  Cospan cocone_right = right_way(po.p2);
  bool commutes = find_two_iso(hcompose(cocone_left, right_way(f)),
                               hcompose(cocone_right, right_way(g)))
                      .has_value();
  RigidReport rigid = verify_rigid(algebra);
  return PushoutAlgebraResult{po, std::move(algebra), std::move(cocone_left),
                              std::move(cocone_right), commutes, rigid};
}

bool verify_bar_cocone(const BarComplexTruncation& t, const PushoutAlgebraResult& p) {
  const FinSet& b = t.to_left.cod();
  const FinSet& c = t.to_right.cod();
  if (p.carrier.p1.dom() != b || p.carrier.p2.dom() != c) {
    throw TypeMismatch("bar cocone: pushout legs do not match the bar modules");
  }

  std::vector<Cospan> cocones;
  for (std::size_t k = 0; k <= t.levels; ++k) {
    std::map<std::string, std::string> fn;
    for (const auto& x : b.elements()) fn["m/" + x] = p.carrier.p1(x);
    for (const auto& x : c.elements()) fn["n/" + x] = p.carrier.p2(x);
    for (std::size_t j = 1; j <= k; ++j) {
      for (const auto& x : t.base.elements()) {
        fn["a" + std::to_string(j) + "/" + x] = p.carrier.p1(t.to_left(x));
      }
    }
    cocones.push_back(
        right_way(FinFn::make(t.level_objects[k], p.carrier.apex, fn)));
  }

  for (std::size_t k = 1; k <= t.levels; ++k) {
    for (const Cospan& face : t.faces[k]) {
      if (!find_two_iso(hcompose(cocones[k - 1], face), cocones[k])) return false;
    }
  }
  for (std::size_t k = 0; k + 1 <= t.levels; ++k) {
    for (const Cospan& s : t.degeneracies[k]) {
      if (!find_two_iso(hcompose(cocones[k + 1], s), cocones[k])) return false;
    }
  }
  return true;
}

bool forgetful_cobase_change_check(const FinFn& f, const FinFn& g) {
  Pushout po = pushout(f, g);
  return verify_cobase_change(CommutingSquare::make(f, g, po.p1, po.p2));
}

CommutingSquare double_fold_square(const FinSet& a) {
  Coproduct aa = coproduct(a, a);
  Coproduct t4 = coproduct(aa.sum, aa.sum);     // (A+A)+(A+A)
  Coproduct t3 = coproduct(aa.sum, a);          // (A+A)+A

  // top: id + fold + id, merging the two middle copies.
  std::vector<std::size_t> top_idx(t4.sum.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    top_idx[t4.inj1.at_index(aa.inj1.at_index(i))] = t3.inj1.at_index(aa.inj1.at_index(i));
    top_idx[t4.inj1.at_index(aa.inj2.at_index(i))] = t3.inj1.at_index(aa.inj2.at_index(i));
    top_idx[t4.inj2.at_index(aa.inj1.at_index(i))] = t3.inj1.at_index(aa.inj2.at_index(i));
    top_idx[t4.inj2.at_index(aa.inj2.at_index(i))] = t3.inj2.at_index(i);
  }
  FinFn top = FinFn::from_indices(t4.sum, t3.sum, std::move(top_idx));

  // left: fold + fold.
  FinFn left = coproduct_fn(fold_fn(a), fold_fn(a));

  // right: the ternary fold.
  std::vector<std::size_t> tern_idx(t3.sum.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    tern_idx[t3.inj1.at_index(aa.inj1.at_index(i))] = i;
    tern_idx[t3.inj1.at_index(aa.inj2.at_index(i))] = i;
    tern_idx[t3.inj2.at_index(i)] = i;
  }
  FinFn tern = FinFn::from_indices(t3.sum, a, std::move(tern_idx));

  return CommutingSquare::make(top, left, tern, fold_fn(a));
}

}  // namespace cospans
