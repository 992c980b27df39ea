#pragma once

#include <cstdint>
#include <vector>

#include "opack/instance.hpp"

namespace opack {

struct GreedyResult {
  std::vector<int> packed_ids;
  Packing packing;
  std::int64_t value = 0;
  bool packed_all = false;
};

// Placement-point construction: a point list seeded with the origin, each
// removed point takes the first box type (in the round's order) that still
// has supply and fits without overlap, and every placed box spawns one new
// point per axis. Round one orders types by decreasing value; later rounds
// reweight values with uniform draws from (0,1]. Returns the best-valued
// round; deterministic for a fixed seed.
GreedyResult greedy_pack(const Instance& instance, const std::vector<int>& counts,
                         std::uint64_t seed, int rounds);

}  // namespace opack
