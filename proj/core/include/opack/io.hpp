#pragma once

#include <stdexcept>
#include <string>

#include "opack/instance.hpp"

namespace opack {

// Parse/serialize errors carry 1-based line and column.
struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line), column(column) {}
  int line;
  int column;
};

// Canonical line-oriented format:
//
//   d
//   W_1 ... W_d
//   m
//   w_1 ... w_d value count        (one line per type)
//
// serialize_instance emits the normal form (single spaces, '\n' line ends);
// parse(serialize(x)) == x and serialize is byte-stable.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

enum class OrlibFormat {
  Ngcut,  // m / L W / per piece: l w q v    (or l w p q v with p = 0)
  Gcut,   // m / L W / per piece: l w v      (one box per piece)
  Cgcut,  // same layout as ngcut
};

// Imports a 2-D OR-library cutting file. Pieces larger than the container
// are dropped (the usual initial reduction); everything else is validated.
Instance import_orlib(const std::string& text, OrlibFormat format);

}  // namespace opack
