#pragma once

#include <vector>

#include "opack/okp.hpp"

namespace opack {

// Candidate strip heights: subset sums of the box heights, deduplicated,
// clipped to [max single height, total height].
std::vector<Extent> normal_heights(const Instance& instance);

enum class SppStatus { Optimal, Bounds };

struct SppResult {
  SppStatus status = SppStatus::Optimal;
  Extent best_height = 0;   // height of the witness packing
  Extent lower_bound = 0;   // proved lower bound; equals best_height when optimal
  Packing packing;
  OkpCounters counters;
};

struct SppOptions {
  std::uint64_t seed = 1;
  OppOptions opp;
};

// Exact strip packing by height descent: a heuristic start, volume-based
// lower bounds, then feasibility tests walking down the normal heights.
// The base directions are fixed; the last direction is minimized.
SppResult solve_spp(const Instance& instance, const SearchLimits& limits = {},
                    const SppOptions& options = {});

}  // namespace opack
