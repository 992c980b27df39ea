#include "opack/generate.hpp"

#include <random>
#include <stdexcept>

namespace opack {

namespace {

// Closed-range integer draw from the raw 64-bit stream; kept free of
// std::uniform_int_distribution so outputs are identical across platforms.
std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = (std::uint64_t)(hi - lo + 1);
  return lo + (std::int64_t)(rng() % span);
}

struct ClassRange {
  Extent lo[3];
  Extent hi[3];
};

// Size ranges per box-type class, two- and three-dimensional variants.
const ClassRange k2d[4] = {
    {{1, 75, 0}, {50, 100, 0}},   // bulky in 2
    {{75, 1, 0}, {100, 50, 0}},   // bulky in 1
    {{50, 50, 0}, {100, 100, 0}}, // large
    {{1, 1, 0}, {50, 50, 0}},     // small
};
const ClassRange k3d[5] = {
    {{1, 75, 75}, {50, 100, 100}},
    {{75, 1, 75}, {100, 50, 100}},
    {{75, 75, 1}, {100, 100, 50}},
    {{50, 50, 50}, {100, 100, 100}},
    {{1, 1, 1}, {50, 50, 50}},
};

// Class probabilities in percent, indexed by generator type.
const int k2d_percent[3][4] = {{20, 20, 20, 40}, {15, 15, 15, 55}, {10, 10, 10, 70}};
const int k3d_percent[3][5] = {{20, 20, 20, 20, 20},
                               {15, 15, 15, 15, 40},
                               {10, 10, 10, 10, 60}};

}  // namespace

Instance generate_instance(int dimension, GeneratorType type, int num_types,
                           int per_type_count, std::uint64_t seed) {
  if (dimension != 2 && dimension != 3)
    throw std::invalid_argument("generator supports dimensions 2 and 3");
  if (num_types < 1 || per_type_count < 1)
    throw std::invalid_argument("generator needs at least one type and one box per type");

  std::mt19937_64 rng(seed);
  int ti = (int)type;
  int num_classes = dimension == 2 ? 4 : 5;

  std::vector<BoxType> types;
  for (int t = 0; t < num_types; ++t) {
    int roll = (int)draw_int(rng, 1, 100);
    int cls = num_classes - 1;
    int acc = 0;
    for (int c = 0; c < num_classes; ++c) {
      acc += dimension == 2 ? k2d_percent[ti][c] : k3d_percent[ti][c];
      if (roll <= acc) { cls = c; break; }
    }
    const ClassRange& range = dimension == 2 ? k2d[cls] : k3d[cls];
    BoxType bt;
    std::int64_t volume = 1;
    for (int i = 0; i < dimension; ++i) {
      Extent w = draw_int(rng, range.lo[i], range.hi[i]);
      bt.sizes.push_back(w);
      volume *= w;
    }
    bt.value = volume * draw_int(rng, 1, 3);
    bt.count = per_type_count;
    types.push_back(std::move(bt));
  }
  std::vector<Extent> container(dimension, 100);
  return Instance(dimension, std::move(container), std::move(types));
}

}  // namespace opack
