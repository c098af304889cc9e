#include "cospans/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace cospans {

namespace {

FinSet family(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet::make(std::move(labels));
}

}  // namespace

std::vector<Cospan> enumerate_cospans(std::size_t max_size) {
  std::vector<Cospan> out;
  for (std::size_t x = 0; x <= max_size; ++x) {
    FinSet apex = family("p", x);
    for (std::size_t a = 0; a <= max_size; ++a) {
      if (x == 0 && a > 0) continue;
      FinSet src = family("a", a);
      for (std::size_t b = 0; b <= max_size; ++b) {
        if (x == 0 && b > 0) continue;
        FinSet tgt = family("b", b);
        for (const FinFn& left : enumerate_functions(src, apex)) {
          for (const FinFn& right : enumerate_functions(tgt, apex)) {
            out.push_back(Cospan::make(src, tgt, apex, left, right));
          }
        }
      }
    }
  }
  return out;
}

std::string cospan_relabeling_key(const Cospan& c) {
  const std::size_t a = c.src.size();
  const std::size_t b = c.tgt.size();
  const std::size_t x = c.apex.size();

  auto permutations = [](std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  };
  auto perms_a = permutations(a);
  auto perms_b = permutations(b);
  auto perms_x = permutations(x);

  std::string best;
  for (const auto& px : perms_x) {
    std::vector<std::size_t> inv_x(x);
    for (std::size_t i = 0; i < x; ++i) inv_x[px[i]] = i;
    for (const auto& pa : perms_a) {
      std::string left_part;
      for (std::size_t i = 0; i < a; ++i) {
        left_part += static_cast<char>('0' + inv_x[c.left.at_index(pa[i])]);
      }
      for (const auto& pb : perms_b) {
        std::string key = std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(x) + ";" + left_part + ";";
        for (std::size_t i = 0; i < b; ++i) {
          key += static_cast<char>('0' + inv_x[c.right.at_index(pb[i])]);
        }
        if (best.empty() || key < best) best = std::move(key);
      }
    }
  }
  return best;
}

Cospan random_cospan(Lcg& rng, std::size_t max_size) {
  std::size_t x = rng.below(max_size + 1);
  std::size_t a = (x == 0) ? 0 : rng.below(max_size + 1);
  std::size_t b = (x == 0) ? 0 : rng.below(max_size + 1);
  FinSet src = family("a", a);
  FinSet tgt = family("b", b);
  FinSet apex = family("p", x);
  std::vector<std::size_t> li(a), ri(b);
  for (auto& i : li) i = rng.below(x == 0 ? 1 : x);
  for (auto& i : ri) i = rng.below(x == 0 ? 1 : x);
  return Cospan::make(src, tgt, apex, FinFn::from_indices(src, apex, li),
                      FinFn::from_indices(tgt, apex, ri));
}

FinFn random_function(Lcg& rng, std::size_t max_size) {
  std::size_t a = rng.below(max_size + 1);
  std::size_t b = (a == 0) ? rng.below(max_size + 1) : 1 + rng.below(max_size);
  FinSet dom = family("a", a);
  FinSet cod = family("b", b);
  std::vector<std::size_t> idx(a);
  for (auto& i : idx) i = rng.below(b);
  return FinFn::from_indices(dom, cod, std::move(idx));
}

}  // namespace cospans
