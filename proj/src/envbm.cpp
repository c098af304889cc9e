#include "cospans/envbm.hpp"

#include <algorithm>
#include <deque>

namespace cospans {

// ---------------------------------------------------------------------------
// Objects
// ---------------------------------------------------------------------------

EnvBMObject EnvBMObject::make(FinSet left, FinSet middle, FinSet right) {
  std::vector<std::string> all;
  for (const auto& x : left.elements()) all.push_back(x);
  for (const auto& x : middle.elements()) all.push_back(x);
  for (const auto& x : right.elements()) all.push_back(x);
  FinSet::make(all);  // throws DuplicateLabel if the parts overlap
  return EnvBMObject{std::move(left), std::move(middle), std::move(right)};
}

FinSet EnvBMObject::underlying() const {
  std::vector<std::string> all;
  all.reserve(total_size());
  for (const auto& x : left.elements()) all.push_back(x);
  for (const auto& x : middle.elements()) all.push_back(x);
  for (const auto& x : right.elements()) all.push_back(x);
  return FinSet::make(std::move(all));
}

int EnvBMObject::part_of(const std::string& label) const {
  if (left.contains(label)) return 0;
  if (middle.contains(label)) return 1;
  if (right.contains(label)) return 2;
  throw UnknownName("label \"" + label + "\" is in no part");
}

EnvBMObject canonical_envbm_object(std::size_t nl, std::size_t nm, std::size_t nr) {
  auto run = [](const char* prefix, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return FinSet::make(std::move(labels));
  };
  return EnvBMObject::make(run("l", nl), run("m", nm), run("r", nr));
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

EnvBMMorphism EnvBMMorphism::make(
    EnvBMObject src, EnvBMObject tgt, FinFn fn,
    std::map<std::string, std::vector<std::string>> fiber_orders) {
  FinSet su = src.underlying();
  FinSet tu = tgt.underlying();
  if (fn.dom() != su || fn.cod() != tu) {
    throw TypeMismatch("envelope morphism function boundaries do not match");
  }
  if (fiber_orders.size() != tu.size()) {
    throw TypeMismatch("fiber orders must list exactly the target labels");
  }
  for (const auto& [y, order] : fiber_orders) {
    if (!tu.contains(y)) {
      throw TypeMismatch("fiber order key \"" + y + "\" is not a target label");
    }
    for (const auto& x : order) {
      if (!su.contains(x)) {
        throw TypeMismatch("fiber order entry \"" + x + "\" is not a source label");
      }
    }
  }
  return EnvBMMorphism{std::move(src), std::move(tgt), std::move(fn),
                       std::move(fiber_orders)};
}

namespace {

std::vector<std::string> fiber_of(const EnvBMMorphism& m, const std::string& y) {
  std::vector<std::string> fiber;
  const FinSet& su = m.fn.dom();
  std::size_t yi = m.fn.cod().index_of(y);
  for (std::size_t i = 0; i < su.size(); ++i) {
    if (m.fn.at_index(i) == yi) fiber.push_back(su.label(i));
  }
  return fiber;
}

}  // namespace

EnvBMValidation envbm_validate(const EnvBMMorphism& m) {
  EnvBMValidation v;
  auto fail = [&v](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };

  FinSet tgt_u = m.tgt.underlying();
  for (const auto& y : tgt_u.elements()) {
    std::vector<std::string> fiber = fiber_of(m, y);
    const auto& order = m.fiber_orders.at(y);

    std::vector<std::string> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != fiber) {
      fail("order at \"" + y + "\" is not a permutation of the fiber");
      continue;
    }

    int part = m.tgt.part_of(y);
    if (part == 0) {
      for (const auto& x : fiber) {
        if (m.src.part_of(x) != 0) {
          fail("fiber of left-part \"" + y + "\" leaves the left part at \"" + x + "\"");
        }
      }
    } else if (part == 2) {
      for (const auto& x : fiber) {
        if (m.src.part_of(x) != 2) {
          fail("fiber of right-part \"" + y + "\" leaves the right part at \"" + x + "\"");
        }
      }
    } else {
      std::size_t middle_count = 0;
      for (const auto& x : fiber) {
        if (m.src.part_of(x) == 1) ++middle_count;
      }
      if (middle_count != 1) {
        fail("fiber of middle-part \"" + y + "\" has " + std::to_string(middle_count) +
             " middle elements instead of exactly 1");
        continue;
      }
      // The order must run through the segments left < middle < right.
      int stage = 0;
      for (const auto& x : order) {
        int p = m.src.part_of(x);
        if (p < stage) {
          fail("order at \"" + y + "\" does not respect the segment order");
          break;
        }
        stage = p;
      }
    }
  }
  return v;
}

EnvBMMorphism envbm_identity(const EnvBMObject& x) {
  FinSet u = x.underlying();
  std::map<std::string, std::vector<std::string>> orders;
  for (const auto& e : u.elements()) orders[e] = {e};
  return EnvBMMorphism::make(x, x, FinFn::identity(u), std::move(orders));
}

EnvBMMorphism envbm_compose(const EnvBMMorphism& g, const EnvBMMorphism& f) {
  if (f.tgt != g.src) {
    throw TypeMismatch("envbm_compose: boundaries do not match");
  }
  if (!envbm_validate(f).ok || !envbm_validate(g).ok) {
    throw TypeMismatch("envbm_compose: inputs must be valid morphisms");
  }
  std::map<std::string, std::vector<std::string>> orders;
  FinSet tgt_u = g.tgt.underlying();
  for (const auto& z : tgt_u.elements()) {
    std::vector<std::string> order;
    for (const auto& y : g.fiber_orders.at(z)) {
      const auto& inner = f.fiber_orders.at(y);
      order.insert(order.end(), inner.begin(), inner.end());
    }
    orders[z] = std::move(order);
  }
  EnvBMMorphism out = EnvBMMorphism::make(f.src, g.tgt, compose_fn(g.fn, f.fn),
                                          std::move(orders));
  if (!envbm_validate(out).ok) {
    throw Error("composite envelope morphism fails validation (internal)");
  }
  return out;
}

EnvBMObject envbm_tensor(const EnvBMObject& x, const EnvBMObject& y) {
  return EnvBMObject::make(coproduct(x.left, y.left).sum,
                           coproduct(x.middle, y.middle).sum,
                           coproduct(x.right, y.right).sum);
}

EnvBMMorphism envbm_tensor(const EnvBMMorphism& f, const EnvBMMorphism& g) {
  EnvBMObject src = envbm_tensor(f.src, g.src);
  EnvBMObject tgt = envbm_tensor(f.tgt, g.tgt);
  // Prefixing each part agrees with prefixing the underlying set, so the
  // underlying function is the coproduct of the underlying functions.
  FinFn fn = coproduct_fn(f.fn, g.fn);
  std::map<std::string, std::vector<std::string>> orders;
  for (const auto& [y, order] : f.fiber_orders) {
    std::vector<std::string> out;
    for (const auto& x : order) out.push_back("L." + x);
    orders["L." + y] = std::move(out);
  }
  for (const auto& [y, order] : g.fiber_orders) {
    std::vector<std::string> out;
    for (const auto& x : order) out.push_back("R." + x);
    orders["R." + y] = std::move(out);
  }
  return EnvBMMorphism::make(std::move(src), std::move(tgt), std::move(fn),
                             std::move(orders));
}

// ---------------------------------------------------------------------------
// Hom enumeration
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> orderings_of_fiber(
    const EnvBMObject& src, int tgt_part, const std::vector<std::string>& fiber) {
  std::vector<std::vector<std::string>> out;
  if (tgt_part == 1) {
    std::vector<std::string> ls, ms, rs;
    for (const auto& x : fiber) {
      int p = src.part_of(x);
      (p == 0 ? ls : p == 1 ? ms : rs).push_back(x);
    }
    if (ms.size() != 1) return out;
    std::sort(ls.begin(), ls.end());
    std::sort(rs.begin(), rs.end());
    std::vector<std::string> pl = ls;
    do {
      std::vector<std::string> pr = rs;
      do {
        std::vector<std::string> order = pl;
        order.push_back(ms.front());
        order.insert(order.end(), pr.begin(), pr.end());
        out.push_back(std::move(order));
      } while (std::next_permutation(pr.begin(), pr.end()));
    } while (std::next_permutation(pl.begin(), pl.end()));
    return out;
  }
  for (const auto& x : fiber) {
    if (src.part_of(x) != (tgt_part == 0 ? 0 : 2)) return out;
  }
  std::vector<std::string> perm = fiber;
  std::sort(perm.begin(), perm.end());
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<EnvBMMorphism> envbm_hom(const EnvBMObject& x, const EnvBMObject& y) {
  std::vector<EnvBMMorphism> out;
  FinSet xu = x.underlying();
  FinSet yu = y.underlying();
  for (const FinFn& fn : enumerate_functions(xu, yu)) {
    EnvBMMorphism probe{x, y, fn, {}};
    std::vector<std::string> targets = yu.elements();
    std::vector<std::vector<std::vector<std::string>>> choices;
    bool feasible = true;
    for (const auto& t : targets) {
      // An empty fiber over a left/right element still has the one empty
      // ordering; an empty list therefore always means "constraint violated".
      auto orders = orderings_of_fiber(x, y.part_of(t), fiber_of(probe, t));
      if (orders.empty()) {
        feasible = false;
        break;
      }
      choices.push_back(std::move(orders));
    }
    if (!feasible) continue;

    std::vector<std::size_t> pos(choices.size(), 0);
    while (true) {
      std::map<std::string, std::vector<std::string>> orders;
      for (std::size_t i = 0; i < targets.size(); ++i) {
        orders[targets[i]] = choices[i][pos[i]];
      }
      out.push_back(EnvBMMorphism::make(x, y, fn, std::move(orders)));
      std::size_t i = choices.size();
      bool done = choices.empty();
      while (i > 0) {
        --i;
        if (++pos[i] < choices[i].size()) break;
        pos[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators and the generation check
// ---------------------------------------------------------------------------

namespace {

EnvBMMorphism make_envbm(const EnvBMObject& src, const EnvBMObject& tgt,
                         const std::map<std::string, std::string>& fn,
                         std::map<std::string, std::vector<std::string>> orders) {
  return EnvBMMorphism::make(src, tgt,
                             FinFn::make(src.underlying(), tgt.underlying(), fn),
                             std::move(orders));
}

}  // namespace

std::vector<EnvBMMorphism> envbm_generators() {
  EnvBMObject lmr = canonical_envbm_object(1, 1, 1);
  EnvBMObject m1 = canonical_envbm_object(0, 1, 0);
  EnvBMObject zero = canonical_envbm_object(0, 0, 0);
  EnvBMObject l1 = canonical_envbm_object(1, 0, 0);
  EnvBMObject l2 = canonical_envbm_object(2, 0, 0);
  EnvBMObject r1 = canonical_envbm_object(0, 0, 1);
  EnvBMObject r2 = canonical_envbm_object(0, 0, 2);

  std::vector<EnvBMMorphism> gens;
  gens.push_back(make_envbm(lmr, m1,
                            {{"l0", "m0"}, {"m0", "m0"}, {"r0", "m0"}},
                            {{"m0", {"l0", "m0", "r0"}}}));
  gens.push_back(make_envbm(zero, l1, {}, {{"l0", {}}}));
  gens.push_back(make_envbm(l2, l1, {{"l0", "l0"}, {"l1", "l0"}},
                            {{"l0", {"l0", "l1"}}}));
  gens.push_back(make_envbm(zero, r1, {}, {{"r0", {}}}));
  gens.push_back(make_envbm(r2, r1, {{"r0", "r0"}, {"r1", "r0"}},
                            {{"r0", {"r0", "r1"}}}));
  return gens;
}

namespace {

std::string envbm_key(const EnvBMMorphism& m) {
  std::string key;
  auto add_obj = [&key](const EnvBMObject& o) {
    for (const auto& part : {&o.left, &o.middle, &o.right}) {
      key += '[';
      for (const auto& x : part->elements()) {
        key += x;
        key += ',';
      }
      key += ']';
    }
  };
  add_obj(m.src);
  key += "->";
  add_obj(m.tgt);
  key += '|';
  for (const auto& [x, y] : m.fn.as_label_map()) {
    key += x + ">" + y + ";";
  }
  key += '|';
  for (const auto& [y, order] : m.fiber_orders) {
    key += y + ":(";
    for (const auto& x : order) {
      key += x;
      key += ',';
    }
    key += ')';
  }
  return key;
}

// Part-respecting relabeling of m onto canonical objects, fixing the sorted
// order of labels within each part.
EnvBMMorphism canonicalize_envbm(const EnvBMMorphism& m) {
  auto canonical_of = [](const EnvBMObject& o) {
    return canonical_envbm_object(o.left.size(), o.middle.size(), o.right.size());
  };
  auto bijection = [](const EnvBMObject& from, const EnvBMObject& to) {
    // Sorted order within each part maps to sorted order within each part.
    std::map<std::string, std::string> fn;
    auto add = [&fn](const FinSet& a, const FinSet& b) {
      for (std::size_t i = 0; i < a.size(); ++i) fn[a.label(i)] = b.label(i);
    };
    add(from.left, to.left);
    add(from.middle, to.middle);
    add(from.right, to.right);
    return FinFn::make(from.underlying(), to.underlying(), fn);
  };
  EnvBMObject cs = canonical_of(m.src);
  EnvBMObject ct = canonical_of(m.tgt);
  FinFn sb = bijection(m.src, cs);
  FinFn tb = bijection(m.tgt, ct);
  FinFn fn = compose_fn(tb, compose_fn(m.fn, invert(sb)));
  std::map<std::string, std::vector<std::string>> orders;
  for (const auto& [y, order] : m.fiber_orders) {
    std::vector<std::string> mapped;
    for (const auto& x : order) mapped.push_back(sb(x));
    orders[tb(y)] = std::move(mapped);
  }
  return EnvBMMorphism::make(std::move(cs), std::move(ct), std::move(fn),
                             std::move(orders));
}

std::vector<EnvBMObject> envbm_universe(std::size_t size_bound) {
  std::vector<EnvBMObject> out;
  for (std::size_t nl = 0; nl <= size_bound; ++nl) {
    for (std::size_t nm = 0; nl + nm <= size_bound; ++nm) {
      for (std::size_t nr = 0; nl + nm + nr <= size_bound; ++nr) {
        out.push_back(canonical_envbm_object(nl, nm, nr));
      }
    }
  }
  return out;
}

// All part-respecting bijections of a canonical object onto itself, with
// singleton fiber orders (the symmetry action).
std::vector<EnvBMMorphism> part_permutations(const EnvBMObject& o) {
  std::vector<EnvBMMorphism> out;
  auto perms_of = [](const FinSet& s) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
  };
  FinSet u = o.underlying();
  for (const auto& pl : perms_of(o.left)) {
    for (const auto& pm : perms_of(o.middle)) {
      for (const auto& pr : perms_of(o.right)) {
        std::map<std::string, std::string> fn;
        for (std::size_t i = 0; i < o.left.size(); ++i) {
          fn[o.left.label(i)] = o.left.label(pl[i]);
        }
        for (std::size_t i = 0; i < o.middle.size(); ++i) {
          fn[o.middle.label(i)] = o.middle.label(pm[i]);
        }
        for (std::size_t i = 0; i < o.right.size(); ++i) {
          fn[o.right.label(i)] = o.right.label(pr[i]);
        }
        std::map<std::string, std::vector<std::string>> orders;
        for (const auto& [x, y] : fn) orders[y] = {x};
        out.push_back(make_envbm(o, o, fn, std::move(orders)));
      }
    }
  }
  return out;
}

}  // namespace

bool envbm_generation_check(std::size_t size_bound) {
  // A fiber that absorbs left/right elements into a middle element first
  // inserts the missing unit, so intermediate objects transiently exceed the
  // bound by one element. One step of slack makes the closure complete.
  const std::size_t closure_bound = size_bound + 1;
  std::vector<EnvBMObject> closure_universe = envbm_universe(closure_bound);

  auto shape_key = [](const EnvBMObject& o) {
    return std::to_string(o.left.size()) + "," + std::to_string(o.middle.size()) +
           "," + std::to_string(o.right.size());
  };

  std::map<std::string, EnvBMMorphism> reached;
  std::map<std::string, std::vector<const EnvBMMorphism*>> by_src, by_tgt;
  std::deque<const EnvBMMorphism*> queue;
  auto add = [&](EnvBMMorphism m) {
    std::string key = envbm_key(m);
    auto [it, inserted] = reached.emplace(std::move(key), std::move(m));
    if (inserted) {
      const EnvBMMorphism* p = &it->second;
      by_src[shape_key(p->src)].push_back(p);
      by_tgt[shape_key(p->tgt)].push_back(p);
      queue.push_back(p);
    }
  };

  for (const auto& o : closure_universe) {
    add(envbm_identity(o));
    for (auto& s : part_permutations(o)) add(std::move(s));
  }
  for (auto& g : envbm_generators()) add(std::move(g));

  while (!queue.empty()) {
    const EnvBMMorphism m = *queue.front();
    queue.pop_front();

    // Composites are only useful when the earlier factor starts at an object
    // within the comparison bound; intermediates may use the slack.
    if (m.src.total_size() <= size_bound) {
      std::vector<const EnvBMMorphism*> laters = by_src[shape_key(m.tgt)];
      for (const EnvBMMorphism* later : laters) add(envbm_compose(*later, m));
    }
    {
      std::vector<const EnvBMMorphism*> earliers = by_tgt[shape_key(m.src)];
      for (const EnvBMMorphism* earlier : earliers) {
        if (earlier->src.total_size() <= size_bound) add(envbm_compose(m, *earlier));
      }
    }

    // Tensoring with identities suffices: a general tensor f x g factors as
    // (f x id).(id x g).
    for (const auto& o : closure_universe) {
      if (m.src.total_size() + o.total_size() > closure_bound) continue;
      if (m.tgt.total_size() + o.total_size() > closure_bound) continue;
      EnvBMMorphism id_o = envbm_identity(o);
      add(canonicalize_envbm(envbm_tensor(m, id_o)));
      add(canonicalize_envbm(envbm_tensor(id_o, m)));
    }
  }

  for (const auto& x : envbm_universe(size_bound)) {
    for (const auto& y : envbm_universe(size_bound)) {
      for (const auto& m : envbm_hom(x, y)) {
        if (!reached.count(envbm_key(m))) {
          throw GenerationGap("unreachable morphism " + envbm_key(m));
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

FinSet carrier_copy(const std::string& key, const FinSet& carrier) {
  std::vector<std::string> labels;
  labels.reserve(carrier.size());
  for (const auto& a : carrier.elements()) labels.push_back(key + "/" + a);
  return FinSet::make(std::move(labels));
}

FinFn copy_bijection(const std::string& key, const FinSet& carrier) {
  FinSet copy = carrier_copy(key, carrier);
  std::vector<std::size_t> idx(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    idx[i] = copy.index_of(key + "/" + carrier.label(i));
  }
  return FinFn::from_indices(carrier, copy, std::move(idx));
}

void check_unit_boundaries(const Cospan& c, const FinSet& carrier, const char* side) {
  if (!c.src.empty() || c.tgt != carrier) {
    throw TypeMismatch(std::string("unit cospan for the ") + side +
                       " algebra must run 0 -/-> carrier");
  }
}

void check_mult_boundaries(const Cospan& c, const FinSet& carrier, const char* side) {
  if (c.src != coproduct(carrier, carrier).sum || c.tgt != carrier) {
    throw TypeMismatch(std::string("multiplication cospan for the ") + side +
                       " algebra must run carrier+carrier -/-> carrier");
  }
}

// Ordered fold of the copies at `xs` onto the copy at `final_key`, using the
// supplied unit (empty fold) and multiplication (binary merges). The running
// accumulator lives at a reserved key so it can never collide with source
// element labels.
Cospan fold_copies(const std::vector<std::string>& xs, const FinSet& carrier,
                   const std::optional<Cospan>& unit_c,
                   const std::optional<Cospan>& mult_c, const std::string& final_key,
                   const char* side) {
  FinFn to_final = copy_bijection(final_key, carrier);
  if (xs.empty()) {
    if (!unit_c) {
      throw MissingGeneratorImage(std::string("no unit cospan for the ") + side +
                                  " algebra");
    }
    check_unit_boundaries(*unit_c, carrier, side);
    return reindex_boundaries(*unit_c, FinFn::identity(FinSet{}), to_final);
  }
  if (xs.size() == 1) {
    return right_way(compose_fn(to_final, invert(copy_bijection(xs[0], carrier))));
  }
  if (!mult_c) {
    throw MissingGeneratorImage(std::string("no multiplication cospan for the ") +
                                side + " algebra");
  }
  check_mult_boundaries(*mult_c, carrier, side);

  const std::string acc_key = "\x01" + final_key;
  Cospan acc =
      right_way(compose_fn(copy_bijection(acc_key, carrier),
                           invert(copy_bijection(xs[0], carrier))));
  Coproduct cc = coproduct(carrier, carrier);
  for (std::size_t j = 1; j < xs.size(); ++j) {
    FinFn next_bij = copy_bijection(xs[j], carrier);
    const std::string& out_key = (j + 1 == xs.size()) ? final_key : acc_key;
    std::vector<std::string> merged;
    for (const auto& e : carrier.elements()) merged.push_back(acc_key + "/" + e);
    for (const auto& e : next_bij.cod().elements()) merged.push_back(e);
    FinSet flat = FinSet::make(std::move(merged));
    std::vector<std::size_t> idx(cc.sum.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      idx[cc.inj1.at_index(i)] = flat.index_of(acc_key + "/" + carrier.label(i));
      idx[cc.inj2.at_index(i)] = flat.index_of(xs[j] + "/" + carrier.label(i));
    }
    FinFn src_bij = FinFn::from_indices(cc.sum, flat, std::move(idx));
    Cospan step = reindex_boundaries(*mult_c, src_bij, copy_bijection(out_key, carrier));
    acc = hcompose(step, tensor_flat(acc, identity_cospan(next_bij.cod())));
  }
  return acc;
}

}  // namespace

BimoduleTarget canonical_bimodule_target(const FinSet& carrier) {
  Cospan unit = right_way(FinFn::empty_to(carrier));
  Cospan mult = right_way(fold_fn(carrier));

  // Bi-action (A+A)+A -> A as the ternary fold through the right-way functor.
  Coproduct am = coproduct(carrier, carrier);
  Coproduct amb = coproduct(am.sum, carrier);
  std::vector<std::size_t> idx(amb.sum.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    idx[amb.inj1.at_index(am.inj1.at_index(i))] = i;
    idx[amb.inj1.at_index(am.inj2.at_index(i))] = i;
    idx[amb.inj2.at_index(i)] = i;
  }
  Cospan biaction = right_way(FinFn::from_indices(amb.sum, carrier, std::move(idx)));

  return BimoduleTarget{carrier, carrier, carrier, unit, mult, unit, mult, biaction};
}

FinSet evaluate_object(const BimoduleTarget& t, const EnvBMObject& x) {
  std::vector<std::string> labels;
  auto add = [&labels](const FinSet& part, const FinSet& carrier) {
    for (const auto& e : part.elements()) {
      for (const auto& a : carrier.elements()) labels.push_back(e + "/" + a);
    }
  };
  add(x.left, t.carrier_left);
  add(x.middle, t.carrier_module);
  add(x.right, t.carrier_right);
  return FinSet::make(std::move(labels));
}

Cospan evaluate_bimodule(const BimoduleTarget& t, const EnvBMMorphism& m) {
  EnvBMValidation v = envbm_validate(m);
  if (!v.ok) {
    throw TypeMismatch("evaluate_bimodule: invalid envelope morphism: " +
                       v.violations.front());
  }

  std::vector<Cospan> fibers;
  FinSet tgt_u = m.tgt.underlying();
  for (const auto& y : tgt_u.elements()) {
    const auto& order = m.fiber_orders.at(y);
    int part = m.tgt.part_of(y);
    Cospan fiber_c = identity_cospan(FinSet{});
    if (part == 0) {
      fiber_c = fold_copies(order, t.carrier_left, t.unit_left, t.mult_left, y, "left");
    } else if (part == 2) {
      fiber_c = fold_copies(order, t.carrier_right, t.unit_right, t.mult_right, y,
                            "right");
    } else {
      if (!t.biaction) throw MissingGeneratorImage("no bi-action cospan");
      Coproduct am = coproduct(t.carrier_left, t.carrier_module);
      Coproduct amb = coproduct(am.sum, t.carrier_right);
      if (t.biaction->src != amb.sum || t.biaction->tgt != t.carrier_module) {
        throw TypeMismatch("bi-action cospan must run (A+M)+B -/-> M");
      }
      std::vector<std::string> ls, rs;
      std::string mid;
      for (const auto& x : order) {
        int p = m.src.part_of(x);
        if (p == 0) ls.push_back(x);
        else if (p == 1) mid = x;
        else rs.push_back(x);
      }
      if (ls.empty() && rs.empty()) {
        // A singleton middle fiber is a plain renaming.
        fibers.push_back(
            right_way(compose_fn(copy_bijection(y, t.carrier_module),
                                 invert(copy_bijection(mid, t.carrier_module)))));
        continue;
      }
      // Reserved slot keys keep the three assembled copies clear of any
      // source element labels.
      const std::string slot_l = "\x01L|" + y;
      const std::string slot_m = "\x01M|" + y;
      const std::string slot_r = "\x01R|" + y;
      Cospan left_fold =
          fold_copies(ls, t.carrier_left, t.unit_left, t.mult_left, slot_l, "left");
      Cospan mid_step =
          right_way(compose_fn(copy_bijection(slot_m, t.carrier_module),
                               invert(copy_bijection(mid, t.carrier_module))));
      Cospan right_fold = fold_copies(rs, t.carrier_right, t.unit_right,
                                      t.mult_right, slot_r, "right");
      Cospan assembled = tensor_flat(tensor_flat(left_fold, mid_step), right_fold);

      FinSet flat = assembled.tgt;
      std::vector<std::size_t> idx(amb.sum.size());
      for (std::size_t i = 0; i < t.carrier_left.size(); ++i) {
        idx[amb.inj1.at_index(am.inj1.at_index(i))] =
            flat.index_of(slot_l + "/" + t.carrier_left.label(i));
      }
      for (std::size_t i = 0; i < t.carrier_module.size(); ++i) {
        idx[amb.inj1.at_index(am.inj2.at_index(i))] =
            flat.index_of(slot_m + "/" + t.carrier_module.label(i));
      }
      for (std::size_t i = 0; i < t.carrier_right.size(); ++i) {
        idx[amb.inj2.at_index(i)] = flat.index_of(slot_r + "/" + t.carrier_right.label(i));
      }
      FinFn src_bij = FinFn::from_indices(amb.sum, flat, std::move(idx));
      Cospan step = reindex_boundaries(*t.biaction, src_bij,
                                       copy_bijection(y, t.carrier_module));
      fiber_c = hcompose(step, assembled);
    }
    fibers.push_back(std::move(fiber_c));
  }
  return tensor_flat_many(fibers);
}

}  // namespace cospans
