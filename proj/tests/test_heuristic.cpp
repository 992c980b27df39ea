#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opack/heuristic.hpp"

using namespace opack;

TEST_CASE("two tall boxes stack in a square container") {
  Instance inst(2, {10, 10}, {{{10, 5}, 7, 2}});
  GreedyResult result = greedy_pack(inst, {2}, 1, 1);
  CHECK(result.packed_all);
  CHECK(result.value == 14);
  REQUIRE(result.packing.count(0));
  REQUIRE(result.packing.count(1));
  CHECK(!validate_packing(inst, {0, 1}, result.packing));
  // Stacked: same column, one on top of the other.
  CHECK(result.packing.at(0)[0] == result.packing.at(1)[0]);
}

TEST_CASE("empty availability packs nothing") {
  Instance inst(2, {10, 10}, {{{10, 5}, 7, 2}});
  GreedyResult result = greedy_pack(inst, {0}, 1, 5);
  CHECK(result.value == 0);
  CHECK(result.packed_ids.empty());
  CHECK(result.packed_all);
}

TEST_CASE("rounds are reproducible for a fixed seed") {
  Instance inst(2, {9, 9},
                {{{4, 3}, 9, 2}, {{3, 4}, 8, 2}, {{2, 2}, 3, 3}, {{5, 2}, 6, 1}});
  GreedyResult a = greedy_pack(inst, {2, 2, 3, 1}, 42, 10);
  GreedyResult b = greedy_pack(inst, {2, 2, 3, 1}, 42, 10);
  CHECK(a.value == b.value);
  CHECK(a.packed_ids == b.packed_ids);
  CHECK(a.packing == b.packing);
}

TEST_CASE("packings from every round are valid") {
  Instance inst(2, {8, 7}, {{{3, 3}, 5, 3}, {{2, 5}, 4, 2}, {{6, 1}, 2, 2}});
  GreedyResult result = greedy_pack(inst, {3, 2, 2}, 7, 25);
  CHECK(!validate_packing(inst, result.packed_ids, result.packing));
  CHECK(result.value >= 0);
}

TEST_CASE("first round prefers valuable types") {
  // One valuable large box vs many cheap ones; round one orders by value,
  // so the valuable type lands first at the origin.
  Instance inst(2, {10, 10}, {{{2, 2}, 1, 4}, {{10, 10}, 100, 1}});
  GreedyResult result = greedy_pack(inst, {4, 1}, 3, 1);
  REQUIRE(result.packing.count(4));
  CHECK(result.packing.at(4) == std::vector<Extent>{0, 0});
  CHECK(result.value == 100);
}

TEST_CASE("count validation") {
  Instance inst(2, {10, 10}, {{{2, 2}, 1, 4}});
  CHECK_THROWS_AS(greedy_pack(inst, {5}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(greedy_pack(inst, {1, 1}, 1, 1), std::invalid_argument);
}
