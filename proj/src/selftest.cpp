#include "cospans/selftest.hpp"

#include <chrono>
#include <map>
#include <set>

#include "cospans/json_io.hpp"

namespace cospans {

namespace {

std::vector<Cospan> deduped_cospans(std::size_t max_size) {
  std::vector<Cospan> out;
  std::set<std::string> seen;
  for (Cospan& c : enumerate_cospans(max_size)) {
    if (seen.insert(cospan_relabeling_key(c)).second) out.push_back(std::move(c));
  }
  return out;
}

FinSet sized_set(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet::make(std::move(labels));
}

CriterionResult left_adjoint_agreement(std::size_t max_size) {
  CriterionResult r{"left-adjoint characterization vs bounded search", false, ""};
  std::vector<Cospan> classes = deduped_cospans(max_size);
  std::size_t adjoints = 0;
  for (const Cospan& c : classes) {
    bool decided = is_left_adjoint(c);
    bool searched = search_adjoint(c, 6).has_value();
    if (decided != searched) {
      r.detail = "disagreement on a cospan with |src|=" + std::to_string(c.src.size()) +
                 ", |tgt|=" + std::to_string(c.tgt.size()) +
                 ", |apex|=" + std::to_string(c.apex.size());
      return r;
    }
    if (decided) ++adjoints;
  }
  r.pass = true;
  r.detail = std::to_string(classes.size()) + " relabeling classes, " +
             std::to_string(adjoints) + " left adjoints";
  return r;
}

CriterionResult canonical_rigidity() {
  CriterionResult r{"canonical algebras are rigid (|A| <= 4)", false, ""};
  for (std::size_t n = 0; n <= 4; ++n) {
    RigidReport report = verify_rigid(canonical_algebra(sized_set("x", n)));
    if (!report.ok) {
      r.detail = "|A| = " + std::to_string(n) + " fails (unit adjoint " +
                 std::to_string(report.unit_left_adjoint) + ", mult adjoint " +
                 std::to_string(report.mult_left_adjoint) + ", projection " +
                 std::to_string(report.projection_formula_invertible) + ")";
      return r;
    }
  }
  r.pass = true;
  r.detail = "sizes 0..4";
  return r;
}

CriterionResult frobenius_counitality() {
  CriterionResult r{"Frobenius counitality witnesses (|A| <= 4)", false, ""};
  for (std::size_t n = 0; n <= 4; ++n) {
    FrobeniusReport report = verify_frobenius(canonical_algebra(sized_set("x", n)));
    if (!report.ok) {
      r.detail = "|A| = " + std::to_string(n) + ": " + report.failure;
      return r;
    }
  }
  r.pass = true;
  r.detail = "sizes 0..4";
  return r;
}

CriterionResult transpose_is_mirror(std::size_t max_size, std::uint64_t seed) {
  CriterionResult r{"transpose agrees with mirror", false, ""};
  std::map<FinSet, DualityData> cache;
  auto duality = [&cache](const FinSet& s) -> const DualityData& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, self_duality(s)).first;
    return it->second;
  };
  std::size_t checked = 0;
  for (const Cospan& c : enumerate_cospans(max_size)) {
    Cospan t = transpose_general(c, duality(c.src), duality(c.tgt));
    if (!find_two_iso(t, mirror(c))) {
      r.detail = "exhaustive tier mismatch at instance " + std::to_string(checked);
      return r;
    }
    ++checked;
  }
  Lcg rng(seed);
  for (std::size_t i = 0; i < 200; ++i) {
    Cospan c = random_cospan(rng, 5);
    Cospan t = transpose_general(c, duality(c.src), duality(c.tgt));
    if (!find_two_iso(t, mirror(c))) {
      r.detail = "random tier mismatch at draw " + std::to_string(i);
      return r;
    }
  }
  r.pass = true;
  r.detail = std::to_string(checked) + " exhaustive + 200 random instances";
  return r;
}

CriterionResult adjoint_to_transpose(std::size_t max_size) {
  CriterionResult r{"right-way maps are adjoint to their transpose", false, ""};
  std::size_t checked = 0;
  for (std::size_t a = 0; a <= max_size; ++a) {
    FinSet dom = sized_set("a", a);
    for (std::size_t b = 0; b <= max_size; ++b) {
      FinSet cod = sized_set("b", b);
      for (const FinFn& f : enumerate_functions(dom, cod)) {
        if (!verify_adjoint_to_transpose(f)) {
          r.detail = "fails for a function " + std::to_string(a) + " -> " +
                     std::to_string(b);
          return r;
        }
        ++checked;
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(checked) + " functions";
  return r;
}

CriterionResult classification() {
  CriterionResult r{"unital multiplications classify onto the fold (|A| <= 2)",
                    false, ""};
  try {
    for (std::size_t n = 0; n <= 2; ++n) {
      auto solutions = classify_unital_multiplications(sized_set("x", n), 3);
      if (solutions.empty()) {
        r.detail = "no unital multiplication found for |A| = " + std::to_string(n);
        return r;
      }
    }
  } catch (const ClassificationCounterexample& e) {
    r.detail = e.what();
    return r;
  }
  r.pass = true;
  r.detail = "sizes 0..2, apex bound 3";
  return r;
}

CriterionResult two_cell_invertibility(std::size_t max_size) {
  CriterionResult r{"cells between left-adjoint cospans are invertible", false, ""};
  std::size_t cells = 0;
  for (std::size_t a = 0; a <= max_size; ++a) {
    FinSet src = sized_set("a", a);
    for (std::size_t b = 0; b <= max_size; ++b) {
      FinSet tgt = sized_set("b", b);
      FinSet apex = sized_set("p", b);
      std::vector<Cospan> candidates;
      for (const FinFn& left : enumerate_functions(src, apex)) {
        for (const FinFn& right : enumerate_functions(tgt, apex)) {
          if (!is_bijection(right)) continue;
          candidates.push_back(Cospan::make(src, tgt, apex, left, right));
        }
      }
      for (const Cospan& c : candidates) {
        for (const Cospan& d : candidates) {
          for (const FinFn& m : enumerate_functions(c.apex, d.apex)) {
            if (compose_fn(m, c.left) != d.left) continue;
            if (compose_fn(m, c.right) != d.right) continue;
            ++cells;
            if (!is_bijection(m)) {
              r.detail = "non-invertible leg-commuting cell found";
              return r;
            }
          }
        }
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(cells) + " leg-commuting cells, all bijective";
  return r;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Independent counting oracle: orderings per fiber counted by factorials
// instead of enumerated.
std::size_t envbm_hom_count_formula(const EnvBMObject& x, const EnvBMObject& y) {
  FinSet xu = x.underlying();
  FinSet yu = y.underlying();
  std::size_t total = 0;
  for (const FinFn& fn : enumerate_functions(xu, yu)) {
    std::size_t prod = 1;
    bool valid = true;
    for (std::size_t t = 0; t < yu.size() && valid; ++t) {
      std::size_t l_cnt = 0, m_cnt = 0, r_cnt = 0;
      for (std::size_t i = 0; i < xu.size(); ++i) {
        if (fn.at_index(i) != t) continue;
        int p = x.part_of(xu.label(i));
        if (p == 0) ++l_cnt;
        else if (p == 1) ++m_cnt;
        else ++r_cnt;
      }
      int tgt_part = y.part_of(yu.label(t));
      if (tgt_part == 0) {
        if (m_cnt || r_cnt) valid = false;
        else prod *= factorial(l_cnt);
      } else if (tgt_part == 2) {
        if (l_cnt || m_cnt) valid = false;
        else prod *= factorial(r_cnt);
      } else {
        if (m_cnt != 1) valid = false;
        else prod *= factorial(l_cnt) * factorial(r_cnt);
      }
    }
    if (valid) total += prod;
  }
  return total;
}

CriterionResult envbm_criteria(std::size_t max_size) {
  CriterionResult r{"envelope hom-sets: oracle counts and generation closure",
                    false, ""};
  std::vector<EnvBMObject> universe;
  for (std::size_t nl = 0; nl <= max_size; ++nl) {
    for (std::size_t nm = 0; nl + nm <= max_size; ++nm) {
      for (std::size_t nr = 0; nl + nm + nr <= max_size; ++nr) {
        universe.push_back(canonical_envbm_object(nl, nm, nr));
      }
    }
  }
  std::size_t morphisms = 0;
  for (const auto& x : universe) {
    for (const auto& y : universe) {
      std::size_t enumerated = envbm_hom(x, y).size();
      std::size_t counted = envbm_hom_count_formula(x, y);
      if (enumerated != counted) {
        r.detail = "hom cardinality mismatch: enumerated " +
                   std::to_string(enumerated) + " vs counted " +
                   std::to_string(counted);
        return r;
      }
      morphisms += enumerated;
    }
  }
  try {
    if (!envbm_generation_check(max_size)) {
      r.detail = "generation check returned false";
      return r;
    }
  } catch (const GenerationGap& e) {
    r.detail = e.what();
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(morphisms) + " morphisms across " +
             std::to_string(universe.size()) + " objects; generators close all hom-sets";
  return r;
}

CriterionResult beck_chevalley_criteria(std::uint64_t seed) {
  CriterionResult r{"Beck-Chevalley cells detect pushout squares", false, ""};
  Lcg rng(seed);
  for (std::size_t i = 0; i < 100; ++i) {
    std::size_t na = rng.below(5), nb = rng.below(5), nc = rng.below(5);
    if (na > 0) {
      if (nb == 0) nb = 1;
      if (nc == 0) nc = 1;
    }
    FinSet a = sized_set("a", na), b = sized_set("b", nb), c = sized_set("c", nc);
    std::vector<std::size_t> fi(na), gi(na);
    for (auto& v : fi) v = rng.below(nb);
    for (auto& v : gi) v = rng.below(nc);
    FinFn f = FinFn::from_indices(a, b, fi);
    FinFn g = FinFn::from_indices(a, c, gi);
    Pushout po = pushout(f, g);

    if (!verify_cobase_change(CommutingSquare::make(f, g, po.p1, po.p2))) {
      r.detail = "genuine pushout square rejected at draw " + std::to_string(i);
      return r;
    }
    if (!forgetful_cobase_change_check(f, g)) {
      r.detail = "forgetful cobase change fails at draw " + std::to_string(i);
      return r;
    }

    // Padded control: the same cocone into P + {pad} still commutes
    // but no longer a pushout.
    std::vector<std::string> padded_labels = po.apex.elements();
    padded_labels.push_back("~pad");
    FinSet padded = FinSet::make(padded_labels);
    std::map<std::string, std::string> embed;
    for (const auto& e : po.apex.elements()) embed[e] = e;
    FinFn inj = FinFn::make(po.apex, padded, embed);
    CommutingSquare bad = CommutingSquare::make(f, g, compose_fn(inj, po.p1),
                                                compose_fn(inj, po.p2));
    if (verify_cobase_change(bad)) {
      r.detail = "padded non-pushout square accepted at draw " + std::to_string(i);
      return r;
    }
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    if (!verify_cobase_change(double_fold_square(sized_set("x", n)))) {
      r.detail = "double-fold square rejected for |A| = " + std::to_string(n);
      return r;
    }
  }
  r.pass = true;
  r.detail = "100 pushout squares with padded controls, plus double-fold squares";
  return r;
}

CriterionResult bar_criteria() {
  CriterionResult r{"bar truncations, pushout algebras and cocones (sizes <= 2)",
                    false, ""};
  std::size_t instances = 0;
  for (std::size_t na = 0; na <= 2; ++na) {
    FinSet a = sized_set("a", na);
    for (std::size_t nb = 0; nb <= 2; ++nb) {
      if (na > 0 && nb == 0) continue;
      FinSet b = sized_set("b", nb);
      for (std::size_t nc = 0; nc <= 2; ++nc) {
        if (na > 0 && nc == 0) continue;
        FinSet c = sized_set("c", nc);
        for (const FinFn& f : enumerate_functions(a, b)) {
          for (const FinFn& g : enumerate_functions(a, c)) {
            try {
              BarComplexTruncation t = bar_truncation(f, g, 3);
              PushoutAlgebraResult p = pushout_algebra(f, g);
              if (!p.rigid.ok || !p.square_commutes) {
                r.detail = "pushout algebra not rigid or cocone square broken";
                return r;
              }
              if (!verify_bar_cocone(t, p)) {
                r.detail = "bar cocone does not commute";
                return r;
              }
            } catch (const SimplicialIdentityFailure& e) {
              r.detail = e.what();
              return r;
            }
            ++instances;
          }
        }
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(instances) + " (f, g) instances at truncation level 3";
  return r;
}

CriterionResult infrastructure(std::uint64_t seed) {
  CriterionResult r{"serialization round-trips and deterministic reports", false, ""};
  Lcg rng(seed);

  auto roundtrip = [](const WorkspaceValue& v) {
    return value_to_json(value_from_json(json::parse(value_to_json(v).dump()))) ==
           value_to_json(v);
  };

  std::vector<WorkspaceValue> values;
  values.push_back(FinSet::make({"b", "a"}));
  values.push_back(FinSet{});
  values.push_back(fold_fn(FinSet::make({"u", "v"})));
  values.push_back(FinFn::empty_to(FinSet::make({"q"})));
  for (std::size_t i = 0; i < 25; ++i) values.push_back(random_cospan(rng, 5));
  for (std::size_t i = 0; i < 5; ++i) {
    Cospan c = random_cospan(rng, 4);
    values.push_back(identity_cell(c));
  }
  {
    FinSet a2 = sized_set("x", 2);
    values.push_back(double_fold_square(a2));
    values.push_back(canonical_algebra(a2));
    values.push_back(canonical_envbm_object(2, 1, 0));
    EnvBMObject o = canonical_envbm_object(1, 1, 1);
    for (auto& m : envbm_hom(o, canonical_envbm_object(0, 1, 0))) {
      values.push_back(m);
    }
  }
  for (const auto& v : values) {
    if (!roundtrip(v)) {
      r.detail = "round-trip failed for a " +
                 std::string(value_to_json(v).begin().key());
      return r;
    }
  }

  // Determinism: identical inputs give byte-identical serialized reports.
  auto render = [&values]() {
    json out = json::array();
    for (const auto& v : values) out.push_back(value_to_json(v));
    return out.dump(2);
  };
  if (render() != render()) {
    r.detail = "repeated serialization differs";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(values.size()) + " values round-tripped";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results;
  results.push_back(left_adjoint_agreement(opt.max_size));
  results.push_back(canonical_rigidity());
  results.push_back(frobenius_counitality());
  results.push_back(transpose_is_mirror(opt.max_size, opt.seed));
  results.push_back(adjoint_to_transpose(opt.max_size));
  results.push_back(classification());
  results.push_back(two_cell_invertibility(opt.max_size));
  results.push_back(envbm_criteria(opt.max_size));
  results.push_back(beck_chevalley_criteria(opt.seed));
  results.push_back(bar_criteria());
  results.push_back(infrastructure(opt.seed));

  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  // The whole suite must finish comfortably inside the 15-minute budget.
  CriterionResult budget{"selftest wall-clock budget", elapsed <= 15 * 60,
                         std::to_string(elapsed) + "s of 900s"};
  results.push_back(budget);
  return results;
}

}  // namespace cospans
