#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cospans/cospan.hpp"

namespace cospans {

/// 64-bit linear congruential generator (MMIX constants), pinned so that
/// seeded runs reproduce across implementations.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 33;
  }

  /// Uniform draw from [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

/// All cospans between canonically labeled boundaries with
/// |src|, |tgt|, |apex| <= max_size, in a deterministic order. Boundaries use
/// distinct label families (a*, b*, x*).
std::vector<Cospan> enumerate_cospans(std::size_t max_size);

/// Key invariant under independent relabelings of src, tgt and apex; equal
/// keys mean isomorphic diagrams.
std::string cospan_relabeling_key(const Cospan& c);

/// Random cospan with boundary/apex sizes <= max_size drawn from the LCG.
Cospan random_cospan(Lcg& rng, std::size_t max_size);

/// Random function between random canonical sets of size <= max_size.
FinFn random_function(Lcg& rng, std::size_t max_size);

}  // namespace cospans
