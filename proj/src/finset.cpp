#include "cospans/finset.hpp"

#include <algorithm>
#include <numeric>

namespace cospans {

// ---------------------------------------------------------------------------
// FinSet
// ---------------------------------------------------------------------------

FinSet FinSet::make(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) {
    throw DuplicateLabel("label \"" + *dup + "\" repeats");
  }
  FinSet s;
  s.elements_ = std::move(labels);
  return s;
}

bool FinSet::contains(const std::string& label) const {
  return std::binary_search(elements_.begin(), elements_.end(), label);
}

std::size_t FinSet::index_of(const std::string& label) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
  if (it == elements_.end() || *it != label) {
    throw UnknownName("label \"" + label + "\" is not an element");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

FinSet make_set(std::vector<std::string> labels) { return FinSet::make(std::move(labels)); }

// ---------------------------------------------------------------------------
// FinFn
// ---------------------------------------------------------------------------

FinFn FinFn::make(FinSet dom, FinSet cod,
                  const std::map<std::string, std::string>& label_map) {
  std::vector<std::size_t> idx;
  idx.reserve(dom.size());
  for (const auto& x : dom.elements()) {
    auto it = label_map.find(x);
    if (it == label_map.end()) {
      throw TypeMismatch("map is not defined on \"" + x + "\"");
    }
    if (!cod.contains(it->second)) {
      throw TypeMismatch("image \"" + it->second + "\" of \"" + x +
                         "\" is not in the codomain");
    }
    idx.push_back(cod.index_of(it->second));
  }
  if (label_map.size() != dom.size()) {
    throw TypeMismatch("map mentions labels outside the domain");
  }
  return from_indices(std::move(dom), std::move(cod), std::move(idx));
}

FinFn FinFn::from_indices(FinSet dom, FinSet cod, std::vector<std::size_t> indices) {
  if (indices.size() != dom.size()) {
    throw TypeMismatch("index vector length differs from domain size");
  }
  for (std::size_t i : indices) {
    if (i >= cod.size()) throw TypeMismatch("index out of codomain range");
  }
  FinFn f;
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  f.indices_ = std::move(indices);
  return f;
}

FinFn FinFn::identity(FinSet a) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  FinSet cod = a;
  return from_indices(std::move(a), std::move(cod), std::move(idx));
}

FinFn FinFn::empty_to(FinSet cod) {
  return from_indices(FinSet{}, std::move(cod), {});
}

FinFn FinFn::constant(FinSet dom, FinSet cod, const std::string& value) {
  std::vector<std::size_t> idx(dom.size(), cod.index_of(value));
  return from_indices(std::move(dom), std::move(cod), std::move(idx));
}

const std::string& FinFn::operator()(const std::string& label) const {
  return cod_.label(indices_.at(dom_.index_of(label)));
}

std::map<std::string, std::string> FinFn::as_label_map() const {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    m[dom_.label(i)] = cod_.label(indices_[i]);
  }
  return m;
}

FinFn compose_fn(const FinFn& g, const FinFn& f) {
  if (f.cod() != g.dom()) {
    throw TypeMismatch("compose_fn: cod(f) differs from dom(g)");
  }
  std::vector<std::size_t> idx;
  idx.reserve(f.dom().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    idx.push_back(g.at_index(f.at_index(i)));
  }
  return FinFn::from_indices(f.dom(), g.cod(), std::move(idx));
}

bool is_injective(const FinFn& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t i : f.indices()) {
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

bool is_surjective(const FinFn& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t i : f.indices()) hit[i] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_bijection(const FinFn& f) {
  return f.dom().size() == f.cod().size() && is_injective(f);
}

FinFn invert(const FinFn& f) {
  if (!is_bijection(f)) throw TypeMismatch("invert: not a bijection");
  std::vector<std::size_t> idx(f.cod().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) idx[f.at_index(i)] = i;
  return FinFn::from_indices(f.cod(), f.dom(), std::move(idx));
}

// ---------------------------------------------------------------------------
// Coproduct
// ---------------------------------------------------------------------------

Coproduct coproduct(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() + b.size());
  for (const auto& x : a.elements()) labels.push_back("L." + x);
  for (const auto& x : b.elements()) labels.push_back("R." + x);
  FinSet sum = FinSet::make(std::move(labels));

  // "L."-prefixed labels sort before "R."-prefixed ones and preserve the
  // factor order, so inj indices are the concatenation positions.
  std::vector<std::size_t> i1(a.size()), i2(b.size());
  std::iota(i1.begin(), i1.end(), std::size_t{0});
  std::iota(i2.begin(), i2.end(), a.size());
  return Coproduct{sum, FinFn::from_indices(a, sum, std::move(i1)),
                   FinFn::from_indices(b, sum, std::move(i2))};
}

FinFn coproduct_fn(const FinFn& f, const FinFn& g) {
  Coproduct src = coproduct(f.dom(), g.dom());
  Coproduct dst = coproduct(f.cod(), g.cod());
  std::vector<std::size_t> idx(src.sum.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    idx[src.inj1.at_index(i)] = dst.inj1.at_index(f.at_index(i));
  }
  for (std::size_t i = 0; i < g.dom().size(); ++i) {
    idx[src.inj2.at_index(i)] = dst.inj2.at_index(g.at_index(i));
  }
  return FinFn::from_indices(src.sum, dst.sum, std::move(idx));
}

FinFn fold_fn(const FinSet& a) {
  Coproduct cp = coproduct(a, a);
  std::vector<std::size_t> idx(cp.sum.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    idx[cp.inj1.at_index(i)] = i;
    idx[cp.inj2.at_index(i)] = i;
  }
  return FinFn::from_indices(cp.sum, a, std::move(idx));
}

FinFn copair_fn(const FinFn& h1, const FinFn& h2) {
  if (h1.cod() != h2.cod()) throw TypeMismatch("copair_fn: codomains differ");
  Coproduct cp = coproduct(h1.dom(), h2.dom());
  std::vector<std::size_t> idx(cp.sum.size());
  for (std::size_t i = 0; i < h1.dom().size(); ++i) {
    idx[cp.inj1.at_index(i)] = h1.at_index(i);
  }
  for (std::size_t i = 0; i < h2.dom().size(); ++i) {
    idx[cp.inj2.at_index(i)] = h2.at_index(i);
  }
  return FinFn::from_indices(cp.sum, h1.cod(), std::move(idx));
}

FinFn unitor_left_fn(const FinSet& a) {
  Coproduct cp = coproduct(FinSet{}, a);
  std::vector<std::size_t> idx(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) idx[cp.inj2.at_index(i)] = i;
  return FinFn::from_indices(cp.sum, a, std::move(idx));
}

FinFn unitor_right_fn(const FinSet& a) {
  Coproduct cp = coproduct(a, FinSet{});
  std::vector<std::size_t> idx(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) idx[cp.inj1.at_index(i)] = i;
  return FinFn::from_indices(cp.sum, a, std::move(idx));
}

FinFn associator_fn(const FinSet& a, const FinSet& b, const FinSet& c) {
  Coproduct ab = coproduct(a, b);
  Coproduct abc_l = coproduct(ab.sum, c);
  Coproduct bc = coproduct(b, c);
  Coproduct abc_r = coproduct(a, bc.sum);
  std::vector<std::size_t> idx(abc_l.sum.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    idx[abc_l.inj1.at_index(ab.inj1.at_index(i))] = abc_r.inj1.at_index(i);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    idx[abc_l.inj1.at_index(ab.inj2.at_index(i))] =
        abc_r.inj2.at_index(bc.inj1.at_index(i));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    idx[abc_l.inj2.at_index(i)] = abc_r.inj2.at_index(bc.inj2.at_index(i));
  }
  return FinFn::from_indices(abc_l.sum, abc_r.sum, std::move(idx));
}

FinFn symmetry_fn(const FinSet& a, const FinSet& b) {
  Coproduct ab = coproduct(a, b);
  Coproduct ba = coproduct(b, a);
  std::vector<std::size_t> idx(ab.sum.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    idx[ab.inj1.at_index(i)] = ba.inj2.at_index(i);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    idx[ab.inj2.at_index(i)] = ba.inj1.at_index(i);
  }
  return FinFn::from_indices(ab.sum, ba.sum, std::move(idx));
}

// ---------------------------------------------------------------------------
// Pushout
// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // Keep the smaller index as the root so representatives are the first
    // occurrence in concatenation order.
    if (a == b) return;
    if (a < b) parent[b] = a; else parent[a] = b;
  }
};

}  // namespace

Pushout pushout(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom()) {
    throw TypeMismatch("pushout: the two legs have different domains");
  }
  Coproduct cp = coproduct(f.cod(), g.cod());
  UnionFind uf(cp.sum.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    uf.unite(cp.inj1.at_index(f.at_index(i)), cp.inj2.at_index(g.at_index(i)));
  }

  std::vector<std::size_t> root_of(cp.sum.size());
  std::vector<std::string> class_labels;
  std::vector<std::size_t> class_index_of_root(cp.sum.size(), SIZE_MAX);
  for (std::size_t i = 0; i < cp.sum.size(); ++i) root_of[i] = uf.find(i);
  for (std::size_t i = 0; i < cp.sum.size(); ++i) {
    if (root_of[i] == i) {
      class_index_of_root[i] = class_labels.size();
      class_labels.push_back(cp.sum.label(i));
    }
  }
  // Roots are minimal indices of their classes, so class_labels is already
  // sorted (a subsequence of the sorted coproduct labels).
  FinSet apex = FinSet::make(class_labels);

  std::vector<std::size_t> i1(f.cod().size()), i2(g.cod().size());
  for (std::size_t i = 0; i < f.cod().size(); ++i) {
    i1[i] = class_index_of_root[root_of[cp.inj1.at_index(i)]];
  }
  for (std::size_t i = 0; i < g.cod().size(); ++i) {
    i2[i] = class_index_of_root[root_of[cp.inj2.at_index(i)]];
  }
  return Pushout{apex, FinFn::from_indices(f.cod(), apex, std::move(i1)),
                 FinFn::from_indices(g.cod(), apex, std::move(i2))};
}

std::optional<FinFn> verify_pushout_universal(const FinFn& f, const FinFn& g,
                                              const FinFn& p1, const FinFn& p2,
                                              const FinFn& h1, const FinFn& h2) {
  if (f.dom() != g.dom()) throw TypeMismatch("span legs have different domains");
  if (p1.dom() != f.cod() || p2.dom() != g.cod() || p1.cod() != p2.cod()) {
    throw TypeMismatch("candidate cocone boundaries do not match the span");
  }
  if (h1.dom() != f.cod() || h2.dom() != g.cod() || h1.cod() != h2.cod()) {
    throw TypeMismatch("probe cocone boundaries do not match the span");
  }
  if (compose_fn(h1, f) != compose_fn(h2, g)) {
    throw NotACocone("probe cocone does not commute");
  }
  if (compose_fn(p1, f) != compose_fn(p2, g)) {
    throw NotACocone("candidate cocone does not commute");
  }

  const std::size_t n = p1.cod().size();
  std::vector<std::optional<std::size_t>> u(n);
  auto force = [&u](std::size_t at, std::size_t value) {
    if (u[at] && *u[at] != value) return false;
    u[at] = value;
    return true;
  };
  for (std::size_t i = 0; i < p1.dom().size(); ++i) {
    if (!force(p1.at_index(i), h1.at_index(i))) return std::nullopt;
  }
  for (std::size_t i = 0; i < p2.dom().size(); ++i) {
    if (!force(p2.at_index(i), h2.at_index(i))) return std::nullopt;
  }
  // Elements not reached by the cocone would make the mediating map
  // non-unique.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!u[i]) return std::nullopt;
    idx[i] = *u[i];
  }
  return FinFn::from_indices(p1.cod(), h1.cod(), std::move(idx));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<FinSet> enumerate_sets(std::size_t max_size) {
  std::vector<FinSet> out;
  std::vector<std::string> labels;
  out.push_back(FinSet{});
  for (std::size_t k = 1; k <= max_size; ++k) {
    labels.push_back("x" + std::to_string(k - 1));
    out.push_back(FinSet::make(labels));
  }
  return out;
}

std::vector<FinFn> enumerate_functions(const FinSet& a, const FinSet& b) {
  std::vector<FinFn> out;
  if (a.empty()) {
    out.push_back(FinFn::empty_to(b));
    return out;
  }
  if (b.empty()) return out;
  std::vector<std::size_t> idx(a.size(), 0);
  while (true) {
    out.push_back(FinFn::from_indices(a, b, idx));
    std::size_t pos = a.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < b.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace cospans
