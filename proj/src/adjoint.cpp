#include "cospans/adjoint.hpp"

#include <functional>
#include <vector>

namespace cospans {

bool is_left_adjoint(const Cospan& c) { return is_bijection(c.right); }

std::size_t default_apex_bound(const Cospan& c) {
  return c.src.size() + c.tgt.size() + 2;
}

AdjunctionWitness construct_right_adjoint(const Cospan& c) {
  if (!is_left_adjoint(c)) {
    throw NotLeftAdjoint("wrong-way leg is not a bijection");
  }
  // Normal form: A -f-> B = B with f the left leg read through the inverted
  // right leg.
  FinFn f = compose_fn(invert(c.right), c.left);
  Cospan right = wrong_way(f);

  // Unit: id_A => right . c. Pushing out along the identity leg of `right`
  // keeps both composite legs equal, and the unit cell is that common leg.
  HComposite rl = hcompose_legs(right, c);
  TwoCell unit = TwoCell::make(identity_cospan(c.src), rl.composite,
                               rl.composite.left);

  // Counit: c . right => id_B, the fold of the glued apex back onto B.
  HComposite lr = hcompose_legs(c, right);
  const FinSet& glued = lr.composite.apex;
  std::vector<std::optional<std::size_t>> m(glued.size());
  for (std::size_t i = 0; i < c.tgt.size(); ++i) {
    m[lr.from_outer.at_index(i)] = i;  // the B copy retracts identically
  }
  FinFn r_inv = invert(c.right);
  for (std::size_t i = 0; i < c.apex.size(); ++i) {
    std::size_t at = lr.from_inner.at_index(i);
    std::size_t value = r_inv.at_index(i);
    if (m[at] && *m[at] != value) {
      throw Error("counit fold is ill-defined (internal)");
    }
    m[at] = value;
  }
  std::vector<std::size_t> idx(glued.size());
  for (std::size_t i = 0; i < glued.size(); ++i) idx[i] = *m[i];
  TwoCell counit = TwoCell::make(lr.composite, identity_cospan(c.tgt),
                                 FinFn::from_indices(glued, c.tgt, std::move(idx)));

  return AdjunctionWitness{c, right, std::move(unit), std::move(counit)};
}

ZigzagReport verify_adjunction(const AdjunctionWitness& w) {
  const Cospan& l = w.left;
  const Cospan& r = w.right;
  if (r.src != l.tgt || r.tgt != l.src) {
    throw TypeMismatch("candidate right adjoint does not reverse the boundaries");
  }
  if (w.unit.from != identity_cospan(l.src) || w.unit.to != hcompose(r, l)) {
    throw TypeMismatch("unit cell boundaries do not match id => r.l");
  }
  if (w.counit.from != hcompose(l, r) || w.counit.to != identity_cospan(l.tgt)) {
    throw TypeMismatch("counit cell boundaries do not match l.r => id");
  }

  ZigzagReport report;

  TwoCell left_paste = vcompose(
      lunitor(l),
      vcompose(whisker_right(w.counit, l),
               vcompose(associator(l, r, l),
                        vcompose(whisker_left(l, w.unit), invert_cell(runitor(l))))));
  report.left_triangle_ok = (left_paste == identity_cell(l));

  TwoCell right_paste = vcompose(
      runitor(r),
      vcompose(whisker_left(r, w.counit),
               vcompose(invert_cell(associator(r, l, r)),
                        vcompose(whisker_right(w.unit, r), invert_cell(lunitor(r))))));
  report.right_triangle_ok = (right_paste == identity_cell(r));

  report.ok = report.left_triangle_ok && report.right_triangle_ok;
  if (!report.ok) {
    report.detail = !report.left_triangle_ok && !report.right_triangle_ok
                        ? "both zigzag composites differ from the identity"
                    : !report.left_triangle_ok
                        ? "left zigzag (counit * l).(l * unit) is not the identity"
                        : "right zigzag (r * counit).(unit * r) is not the identity";
  }
  return report;
}

namespace {

// Odometer over per-position candidate lists; calls fn for every choice
// vector, stopping early when fn returns true.
bool for_each_choice(const std::vector<std::vector<std::size_t>>& candidates,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pos(candidates.size(), 0);
  std::vector<std::size_t> chosen(candidates.size());
  for (const auto& c : candidates) {
    if (c.empty()) return false;
  }
  while (true) {
    for (std::size_t i = 0; i < candidates.size(); ++i) chosen[i] = candidates[i][pos[i]];
    if (fn(chosen)) return true;
    std::size_t i = candidates.size();
    while (i > 0) {
      --i;
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
      if (i == 0) return false;
    }
    if (candidates.empty()) return false;
  }
}

FinSet candidate_apex(std::size_t k) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) labels.push_back("y" + std::to_string(i));
  return FinSet::make(std::move(labels));
}

}  // namespace

std::optional<AdjunctionWitness> search_adjoint(const Cospan& c, std::size_t apex_bound) {
  const FinSet& a = c.src;
  const FinSet& b = c.tgt;

  for (std::size_t k = 0; k <= apex_bound; ++k) {
    FinSet y = candidate_apex(k);
    for (const FinFn& h : enumerate_functions(b, y)) {
      // Candidate right adjoint r = (B -h-> Y <-kp- A). A unit cell
      // id_A => r.c exists iff both composite legs agree, which pins each
      // kp(a) to the pushout class of the left leg at a.
      Pushout d_po = pushout(c.right, h);
      std::vector<std::vector<std::size_t>> allowed(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t want = d_po.p1.at_index(c.left.at_index(i));
        for (std::size_t j = 0; j < k; ++j) {
          if (d_po.p2.at_index(j) == want) allowed[i].push_back(j);
        }
      }

      std::optional<AdjunctionWitness> found;
      for_each_choice(allowed, [&](const std::vector<std::size_t>& kp_idx) {
        FinFn kp = FinFn::from_indices(a, y, kp_idx);
        Cospan r = Cospan::make(b, a, y, h, kp);
        Cospan d = Cospan::make(a, a, d_po.apex, compose_fn(d_po.p1, c.left),
                                compose_fn(d_po.p2, kp));
        TwoCell unit = TwoCell::make(identity_cospan(a), d, d.left);

        Pushout e_po = pushout(kp, c.left);
        Cospan e = Cospan::make(b, b, e_po.apex, compose_fn(e_po.p1, h),
                                compose_fn(e_po.p2, c.right));

        // Counits are retractions of both composite legs: forced on the leg
        // images, free elsewhere.
        std::vector<std::optional<std::size_t>> forced(e.apex.size());
        bool consistent = true;
        auto force = [&](std::size_t at, std::size_t value) {
          if (forced[at] && *forced[at] != value) {
            consistent = false;
            return;
          }
          forced[at] = value;
        };
        for (std::size_t i = 0; i < b.size() && consistent; ++i) {
          force(e.left.at_index(i), i);
          force(e.right.at_index(i), i);
        }
        if (!consistent) return false;

        std::vector<std::vector<std::size_t>> slots(e.apex.size());
        std::vector<std::size_t> all_b(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) all_b[i] = i;
        for (std::size_t i = 0; i < e.apex.size(); ++i) {
          slots[i] = forced[i] ? std::vector<std::size_t>{*forced[i]} : all_b;
        }
        return for_each_choice(slots, [&](const std::vector<std::size_t>& m_idx) {
          TwoCell counit = TwoCell::make(
              e, identity_cospan(b), FinFn::from_indices(e.apex, b, m_idx));
          AdjunctionWitness w{c, r, unit, counit};
          if (verify_adjunction(w).ok) {
            found = std::move(w);
            return true;
          }
          return false;
        });
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Beck-Chevalley
// ---------------------------------------------------------------------------

CommutingSquare CommutingSquare::make(FinFn f, FinFn g, FinFn gp, FinFn fp) {
  if (f.dom() != g.dom()) {
    throw TypeMismatch("square legs f and g have different domains");
  }
  if (gp.dom() != f.cod() || fp.dom() != g.cod() || gp.cod() != fp.cod()) {
    throw TypeMismatch("square boundary objects do not line up");
  }
  if (compose_fn(gp, f) != compose_fn(fp, g)) {
    throw NotCommuting("g'.f differs from f'.g");
  }
  return CommutingSquare{std::move(f), std::move(g), std::move(gp), std::move(fp)};
}

TwoCell beck_chevalley_cell(const CommutingSquare& sq) {
  HComposite lhs = hcompose_legs(right_way(sq.g), wrong_way(sq.f));
  Cospan rhs = hcompose(wrong_way(sq.fp), right_way(sq.gp));
  auto u = verify_pushout_universal(sq.f, sq.g, lhs.from_inner, lhs.from_outer,
                                    rhs.left, rhs.right);
  if (!u) throw Error("Beck-Chevalley mediating map missing (internal)");
  return TwoCell::make(lhs.composite, rhs, *u);
}

bool verify_cobase_change(const CommutingSquare& sq) {
  return is_invertible_cell(beck_chevalley_cell(sq));
}

}  // namespace cospans
