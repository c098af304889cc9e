#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cospans/bar.hpp"
#include "cospans/enumerate.hpp"
#include "cospans/envbm.hpp"

namespace cospans {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestOptions {
  // Scales the exhaustively enumerated tiers; other bounds are pinned.
  std::size_t max_size = 3;
  std::uint64_t seed = 1;
};

/// Runs the full acceptance suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt);

}  // namespace cospans
