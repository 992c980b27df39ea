#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opack/instance.hpp"
#include "oracles.hpp"

using namespace opack;

namespace {

Instance two_dim(std::vector<Extent> container, std::vector<BoxType> types) {
  return Instance(2, std::move(container), std::move(types));
}

}  // namespace

TEST_CASE("instance invariants") {
  CHECK_THROWS_AS(two_dim({20, 10}, {{{0, 5}, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(two_dim({20, 10}, {{{25, 5}, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(two_dim({20, 10}, {{{5, 5}, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(two_dim({20, 10}, {{{5, 5}, -1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(two_dim({20, 10}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(1, {20}, {{{5}, 1, 1}}), std::invalid_argument);
}

TEST_CASE("box ids are contiguous per type") {
  Instance inst = two_dim({20, 10}, {{{10, 10}, 1, 2}, {{5, 5}, 2, 3}});
  CHECK(inst.num_boxes() == 5);
  CHECK(inst.first_id(0) == 0);
  CHECK(inst.first_id(1) == 2);
  CHECK(inst.box(3).type_index == 1);
  CHECK(inst.box(4).sizes == std::vector<Extent>{5, 5});
}

TEST_CASE("single box at origin is valid") {
  Instance inst = two_dim({20, 10}, {{{10, 10}, 1, 1}});
  Packing p{{0, {0, 0}}};
  CHECK(!validate_packing(inst, {0}, p));
}

TEST_CASE("identical projections overlap in both directions") {
  Instance inst = two_dim({20, 10}, {{{10, 10}, 1, 2}});
  Packing p{{0, {0, 0}}, {1, {5, 0}}};
  auto violation = validate_packing(inst, {0, 1}, p);
  REQUIRE(violation);
  CHECK(violation->kind == PackingViolation::Kind::Overlap);
  CHECK(violation->box_a == 0);
  CHECK(violation->box_b == 1);
}

TEST_CASE("touching boxes are disjoint") {
  Instance inst = two_dim({20, 10}, {{{10, 10}, 1, 2}});
  Packing p{{0, {0, 0}}, {1, {10, 0}}};
  CHECK(!validate_packing(inst, {0, 1}, p));
}

TEST_CASE("unknown box id and subset mismatch") {
  Instance inst = two_dim({20, 10}, {{{10, 10}, 1, 1}});
  Packing p{{0, {0, 0}}};
  auto unknown = validate_packing(inst, {7}, p);
  REQUIRE(unknown);
  CHECK(unknown->kind == PackingViolation::Kind::UnknownBox);
  auto mismatch = validate_packing(inst, {}, p);
  REQUIRE(mismatch);
  CHECK(mismatch->kind == PackingViolation::Kind::SubsetMismatch);
}

TEST_CASE("containment is enforced with the direction named") {
  Instance inst = two_dim({20, 10}, {{{10, 10}, 1, 1}});
  Packing p{{0, {15, 0}}};
  auto violation = validate_packing(inst, {0}, p);
  REQUIRE(violation);
  CHECK(violation->kind == PackingViolation::Kind::OutsideContainer);
  CHECK(violation->direction == 0);
}

// validate_packing must agree with an independently written overlap checker
// on random packings, valid and broken alike.
TEST_CASE("agreement with the naive checker on random placements") {
  std::mt19937_64 rng(20260810);
  for (int round = 0; round < 400; ++round) {
    Instance inst = oracle::random_instance(rng, 2, 9, 4, false);
    std::vector<int> subset;
    Packing p;
    for (int id = 0; id < inst.num_boxes(); ++id) {
      subset.push_back(id);
      std::vector<Extent> pos;
      for (int i = 0; i < inst.dim(); ++i)
        pos.push_back((Extent)(rng() % (std::uint64_t)(inst.container(i) + 1)));
      p[id] = pos;
    }
    bool ok = !validate_packing(inst, subset, p).has_value();
    CHECK(ok == oracle::naive_packing_ok(inst, subset, p));
  }
}
