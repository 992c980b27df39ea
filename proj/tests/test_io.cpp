#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opack/bench_tables.hpp"
#include "opack/generate.hpp"
#include "opack/io.hpp"

using namespace opack;

namespace {

bool same_instance(const Instance& a, const Instance& b) {
  if (a.dim() != b.dim() || a.container() != b.container()) return false;
  if (a.num_types() != b.num_types()) return false;
  for (int t = 0; t < a.num_types(); ++t) {
    if (a.types()[t].sizes != b.types()[t].sizes) return false;
    if (a.types()[t].value != b.types()[t].value) return false;
    if (a.types()[t].count != b.types()[t].count) return false;
  }
  return true;
}

const std::string& fixture(const std::string& name) {
  for (const auto& [n, text] : embedded_okp_fixtures())
    if (n == name) return text;
  throw std::runtime_error("no fixture " + name);
}

}  // namespace

TEST_CASE("okp1 fixture parses to the published shape") {
  Instance okp1 = parse_instance(fixture("okp1"));
  CHECK(okp1.dim() == 2);
  CHECK(okp1.container() == std::vector<Extent>{100, 100});
  CHECK(okp1.num_types() == 15);
  CHECK(okp1.num_boxes() == 50);
}

TEST_CASE("every embedded fixture matches its expected row") {
  for (const auto& [name, text] : embedded_okp_fixtures()) {
    Instance inst = parse_instance(text);
    const ExpectedRow* row = expected_row(name);
    REQUIRE(row != nullptr);
    CHECK(inst.container(0) == row->container_w);
    CHECK(inst.container(1) == row->container_h);
    CHECK(inst.num_types() == row->types);
    CHECK(inst.num_boxes() == row->boxes);
  }
}

TEST_CASE("single type single box") {
  Instance inst = parse_instance("2\n8 6\n1\n3 2 7 1\n");
  CHECK(inst.num_boxes() == 1);
  CHECK(inst.box(0).value == 7);
}

TEST_CASE("zero size is a reported error") {
  CHECK_THROWS_AS(parse_instance("2\n8 6\n1\n0 2 7 1\n"), ParseError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_instance("2\n8 6\n1\n3 x 7 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.column == 3);
  }
}

TEST_CASE("oversized box is rejected, not dropped") {
  CHECK_THROWS_AS(parse_instance("2\n8 6\n1\n9 2 7 1\n"), ParseError);
}

TEST_CASE("round trip is byte identical on fixtures") {
  for (const auto& [name, text] : embedded_okp_fixtures()) {
    Instance inst = parse_instance(text);
    CHECK(serialize_instance(inst) == text);
    CHECK(serialize_instance(inst) == serialize_instance(inst));
    CHECK(same_instance(parse_instance(serialize_instance(inst)), inst));
  }
}

TEST_CASE("generated instances survive the round trip") {
  for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
    Instance inst = generate_instance(2, GeneratorType::II, 12, 2, seed);
    CHECK(same_instance(parse_instance(serialize_instance(inst)), inst));
  }
}

TEST_CASE("orlib ngcut import, four fields per piece") {
  std::string text = "2\n10 10\n3 4 2 12\n5 3 1 20\n";
  Instance inst = import_orlib(text, OrlibFormat::Ngcut);
  CHECK(inst.container() == std::vector<Extent>{10, 10});
  CHECK(inst.num_types() == 2);
  CHECK(inst.types()[0].count == 2);
  CHECK(inst.types()[0].value == 12);
  CHECK(inst.types()[1].sizes == std::vector<Extent>{5, 3});
}

TEST_CASE("orlib ngcut import, five fields with zero minimum") {
  std::string text = "1\n10 10\n3 4 0 2 12\n";
  Instance inst = import_orlib(text, OrlibFormat::Ngcut);
  CHECK(inst.types()[0].count == 2);
  CHECK(inst.types()[0].value == 12);
  CHECK_THROWS_AS(import_orlib("1\n10 10\n3 4 1 2 12\n", OrlibFormat::Ngcut), ParseError);
}

TEST_CASE("orlib gcut import, one box per piece") {
  std::string text = "2\n250 250\n66 64 1000\n100 80 2000\n";
  Instance inst = import_orlib(text, OrlibFormat::Gcut);
  CHECK(inst.num_boxes() == 2);
  CHECK(inst.types()[1].value == 2000);
}

TEST_CASE("orlib import drops pieces that cannot fit") {
  std::string text = "2\n10 10\n12 4 1 9\n5 3 1 20\n";
  Instance inst = import_orlib(text, OrlibFormat::Ngcut);
  CHECK(inst.num_types() == 1);
  CHECK(inst.types()[0].value == 20);
}
