#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opack/instance.hpp"

namespace opack {

// Published two-dimensional OKP benchmark rows: expected optimum, witness
// box count, and instance shape for cross-checking imported data files.
struct ExpectedRow {
  std::string name;
  Extent container_w = 0;
  Extent container_h = 0;
  int types = 0;
  int boxes = 0;
  std::optional<std::int64_t> optimum;      // empty for the open instance
  std::optional<std::int64_t> known_lower;  // open instance bracket
  std::optional<std::int64_t> known_upper;
  int optimal_boxes = -1;
  bool long_running = false;   // reference runtimes in the hundreds of seconds or worse
  bool private_data = false;   // data never published; obtained privately
};

const std::vector<ExpectedRow>& expected_table();
const ExpectedRow* expected_row(const std::string& name);

// Named instance lists for the bench harness.
std::vector<std::string> suite_instances(const std::string& suite);

// okp1..okp5 are published in full; their canonical text is embedded so the
// suite carries its own normative fixtures.
const std::vector<std::pair<std::string, std::string>>& embedded_okp_fixtures();

}  // namespace opack
