#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opack/svg.hpp"

using namespace opack;

namespace {

size_t count_rects(const std::string& svg) {
  size_t count = 0, pos = 0;
  while ((pos = svg.find("<rect", pos)) != std::string::npos) {
    ++count;
    pos += 5;
  }
  return count;
}

}  // namespace

TEST_CASE("one box renders as frame plus one rectangle") {
  Instance inst(2, {20, 10}, {{{10, 10}, 1, 1}});
  std::string svg = emit_svg(inst, {{0, {0, 0}}});
  CHECK(count_rects(svg) == 2);
  CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("each packed box gets one rectangle") {
  Instance inst(2, {20, 10}, {{{10, 10}, 1, 2}});
  std::string svg = emit_svg(inst, {{0, {0, 0}}, {1, {10, 0}}});
  CHECK(count_rects(svg) == 3);
}

TEST_CASE("overlapping packings are rejected before emission") {
  Instance inst(2, {20, 10}, {{{10, 10}, 1, 2}});
  Packing bad{{0, {0, 0}}, {1, {5, 0}}};
  CHECK_THROWS_AS(emit_svg(inst, bad), std::invalid_argument);
}

TEST_CASE("three-dimensional input is rejected") {
  Instance inst(3, {5, 5, 5}, {{{2, 2, 2}, 1, 1}});
  CHECK_THROWS_AS(emit_svg(inst, {{0, {0, 0, 0}}}), std::invalid_argument);
}

TEST_CASE("output is deterministic") {
  Instance inst(2, {20, 10}, {{{10, 10}, 1, 2}});
  Packing p{{0, {0, 0}}, {1, {10, 0}}};
  CHECK(emit_svg(inst, p) == emit_svg(inst, p));
}
