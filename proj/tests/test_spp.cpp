#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opack/spp.hpp"
#include "oracles.hpp"

using namespace opack;

namespace {

Instance strip(Extent width, std::vector<BoxType> types) {
  Extent total = 0;
  for (const BoxType& t : types) total += t.sizes[1] * t.count;
  return Instance(2, {width, total}, std::move(types), ProblemKind::Strip);
}

}  // namespace

TEST_CASE("normal heights are filtered subset sums") {
  CHECK(normal_heights(strip(4, {{{2, 2}, 1, 2}})) == std::vector<Extent>{2, 4});
  CHECK(normal_heights(strip(4, {{{2, 2}, 1, 1}, {{2, 3}, 1, 1}})) ==
        std::vector<Extent>{3, 5});
  CHECK(normal_heights(strip(9, {{{3, 7}, 1, 1}})) == std::vector<Extent>{7});
}

TEST_CASE("two squares sit side by side") {
  SppResult result = solve_spp(strip(4, {{{2, 2}, 1, 2}}));
  CHECK(result.status == SppStatus::Optimal);
  CHECK(result.best_height == 2);
  CHECK(result.lower_bound == 2);
}

TEST_CASE("mixed pair needs height four") {
  SppResult result = solve_spp(strip(4, {{{3, 2}, 1, 1}, {{2, 2}, 1, 1}}));
  CHECK(result.status == SppStatus::Optimal);
  CHECK(result.best_height == 4);
  CHECK(oracle::brute_force_strip_height(strip(4, {{{3, 2}, 1, 1}, {{2, 2}, 1, 1}})) == 4);
}

TEST_CASE("the tight three-box strip needs height five") {
  Instance inst = strip(4, {{{2, 3}, 1, 2}, {{2, 2}, 1, 1}});
  SppResult result = solve_spp(inst);
  CHECK(result.status == SppStatus::Optimal);
  CHECK(result.best_height == 5);
  CHECK(oracle::brute_force_strip_height(inst) == 5);
}

TEST_CASE("witness packing is valid at the returned height") {
  Instance inst = strip(5, {{{3, 2}, 1, 2}, {{2, 3}, 1, 2}, {{5, 1}, 1, 1}});
  SppResult result = solve_spp(inst);
  REQUIRE(result.status == SppStatus::Optimal);
  std::vector<Extent> container = inst.container();
  container[1] = result.best_height;
  Instance shrunk = inst.with_container(container);
  std::vector<int> ids;
  for (int i = 0; i < inst.num_boxes(); ++i) ids.push_back(i);
  CHECK(!validate_packing(shrunk, ids, result.packing));
}

TEST_CASE("agreement with the strip oracle on random instances") {
  std::mt19937_64 rng(909);
  int checked = 0;
  while (checked < 50) {
    std::vector<BoxType> types;
    int boxes = 1 + (int)(rng() % 5);
    int made = 0;
    Extent width = 3 + (Extent)(rng() % 6);
    while (made < boxes) {
      BoxType t;
      t.sizes = {(Extent)(1 + rng() % width), (Extent)(1 + rng() % 4)};
      t.count = 1 + (int)(rng() % (boxes - made));
      t.value = 1;
      made += t.count;
      types.push_back(t);
    }
    Instance inst = strip(width, types);
    ++checked;
    SppResult result = solve_spp(inst);
    REQUIRE(result.status == SppStatus::Optimal);
    CHECK(result.best_height == oracle::brute_force_strip_height(inst));
  }
}
