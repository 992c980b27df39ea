#pragma once

#include <string>

#include "opack/instance.hpp"

namespace opack {

// Scalable drawing of a two-dimensional packing: container frame plus one
// rectangle per box, colored by type. The packing is validated first;
// invalid input or d != 2 throws std::invalid_argument.
std::string emit_svg(const Instance& instance, const Packing& packing);

}  // namespace opack
