#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opack/search_info.hpp"

using namespace opack;

namespace {

Instance two_boxes_20x10() {
  return Instance(2, {20, 10}, {{{10, 10}, 1, 2}});
}

std::vector<Augmentation> drain(SearchInfo& info) {
  std::vector<Augmentation> out;
  while (!info.queue_empty()) out.push_back(info.pop_queue());
  return out;
}

}  // namespace

TEST_CASE("plus in one direction excludes the other at d = 2") {
  SearchInfo info(3, 2);
  CHECK(info.apply(0, 1, Sigma::Plus, 0));
  CHECK(info.state(0, 1, 0) == EdgeState::Required);
  CHECK(info.state(0, 1, 1) == EdgeState::Excluded);
  auto queued = drain(info);
  REQUIRE(queued.size() == 2);
  CHECK(queued[0].sigma == Sigma::Plus);
  CHECK(queued[0].direction == 0);
  CHECK(queued[1].sigma == Sigma::Minus);
  CHECK(queued[1].direction == 1);
}

TEST_CASE("idempotent reapplication queues nothing") {
  SearchInfo info(3, 2);
  CHECK(info.apply(0, 1, Sigma::Plus, 0));
  drain(info);
  CHECK(info.apply(0, 1, Sigma::Plus, 0));
  CHECK(info.queue_empty());
}

TEST_CASE("plus against excluded is a conflict") {
  SearchInfo info(3, 2);
  CHECK(info.apply(0, 1, Sigma::Minus, 0));
  CHECK(!info.apply(0, 1, Sigma::Plus, 0));
}

TEST_CASE("minus against required is a conflict") {
  SearchInfo info(3, 2);
  CHECK(info.apply(0, 1, Sigma::Plus, 0));
  CHECK(!info.apply(0, 1, Sigma::Minus, 0));
}

TEST_CASE("at d = 3 requiring two directions excludes the third") {
  SearchInfo info(2, 3);
  CHECK(info.apply(0, 1, Sigma::Plus, 0));
  CHECK(info.state(0, 1, 1) == EdgeState::Free);
  CHECK(info.apply(0, 1, Sigma::Plus, 1));
  CHECK(info.state(0, 1, 2) == EdgeState::Excluded);
}

TEST_CASE("closure is a fixpoint under random augmentation sequences") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    int n = 3 + (int)(rng() % 4);
    int d = 2 + (int)(rng() % 2);
    SearchInfo info(n, d);
    for (int step = 0; step < 12; ++step) {
      int u = (int)(rng() % n), v = (int)(rng() % n);
      if (u == v) continue;
      Sigma sigma = rng() % 2 ? Sigma::Plus : Sigma::Minus;
      int i = (int)(rng() % d);
      if (!info.apply(u, v, sigma, i)) break;
    }
    info.clear_queue();
    // Re-running the closure rule on every pair changes nothing.
    SearchInfo before = info;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int missing = 0, free_dir = -1;
        for (int i = 0; i < d; ++i)
          if (!info.is_required(u, v, i)) {
            ++missing;
            if (info.is_free(u, v, i)) free_dir = i;
          }
        CHECK(missing > 0);
        if (missing == 1 && free_dir >= 0) CHECK(false);  // closure should have fixed it
      }
    CHECK(info.states_equal(before));
  }
}

TEST_CASE("init_root on the tight two-box instance") {
  Instance inst = two_boxes_20x10();
  auto info = init_root(BoxSubset::whole(inst));
  REQUIRE(info);
  // 10 + 10 > 10 forces the pair in direction 2; closure excludes it in 1.
  CHECK(info->state(0, 1, 1) == EdgeState::Required);
  CHECK(info->state(0, 1, 0) == EdgeState::Excluded);
}

TEST_CASE("init_root detects pairwise infeasibility") {
  Instance inst(2, {20, 10}, {{{10, 10}, 1, 1}, {{15, 10}, 1, 1}});
  CHECK(!init_root(BoxSubset::whole(inst)));
}

TEST_CASE("init_root on a single box is empty and fine") {
  Instance inst(2, {20, 10}, {{{10, 10}, 1, 1}});
  auto info = init_root(BoxSubset::whole(inst));
  REQUIRE(info);
  CHECK(info->queue_empty());
}

TEST_CASE("init_root fixes a type clique in the tightest direction") {
  // Three 4x2 boxes in a 5x6 container: along direction 1 only one fits
  // per row (q = 1), so all three must pairwise overlap there -- but one
  // direction per type is fixed, here direction 1 with ceil(3/1) = 3.
  Instance inst(2, {5, 6}, {{{4, 2}, 1, 3}});
  auto info = init_root(BoxSubset::whole(inst));
  REQUIRE(info);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) {
      CHECK(info->state(u, v, 0) == EdgeState::Required);
      CHECK(info->state(u, v, 1) == EdgeState::Excluded);
    }
}

TEST_CASE("indistinguishability at a fresh root and after a fix") {
  Instance inst(2, {20, 10}, {{{5, 5}, 1, 2}, {{3, 3}, 1, 1}});
  BoxSubset boxes = BoxSubset::whole(inst);
  SearchInfo info(3, 2);
  CHECK(indistinguishable_boxes(info, boxes, 0, 1));
  CHECK(!indistinguishable_boxes(info, boxes, 0, 2));  // different sizes
  CHECK(info.apply(0, 2, Sigma::Plus, 0));
  CHECK(!indistinguishable_boxes(info, boxes, 0, 1));  // adjacency differs now
}

TEST_CASE("indistinguishability is an equivalence relation") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 100; ++round) {
    std::vector<BoxType> types;
    int groups = 1 + (int)(rng() % 3);
    for (int t = 0; t < groups; ++t) {
      BoxType bt;
      bt.sizes = {(Extent)(1 + rng() % 4), (Extent)(1 + rng() % 4)};
      bt.count = 1 + (int)(rng() % 3);
      bt.value = 1;
      types.push_back(bt);
    }
    Instance inst(2, {12, 12}, types);
    BoxSubset boxes = BoxSubset::whole(inst);
    int n = boxes.size();
    SearchInfo info(n, 2);
    for (int step = 0; step < 6; ++step) {
      int u = (int)(rng() % n), v = (int)(rng() % n);
      if (u == v) continue;
      if (!info.apply(u, v, rng() % 2 ? Sigma::Plus : Sigma::Minus, (int)(rng() % 2))) break;
    }
    for (int a = 0; a < n; ++a) {
      CHECK(indistinguishable_boxes(info, boxes, a, a));
      for (int b = 0; b < n; ++b) {
        bool ab = indistinguishable_boxes(info, boxes, a, b);
        CHECK(ab == indistinguishable_boxes(info, boxes, b, a));
        for (int c = 0; c < n; ++c)
          if (ab && indistinguishable_boxes(info, boxes, b, c))
            CHECK(indistinguishable_boxes(info, boxes, a, c));
      }
    }
  }
}
