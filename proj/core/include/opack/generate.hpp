#pragma once

#include <cstdint>

#include "opack/instance.hpp"

namespace opack {

enum class GeneratorType { I, II, III };

// Random OKP test instances: container of size 100 in each direction,
// box-type classes drawn per the generator type's distribution, sizes
// uniform integers on the class ranges, value = volume times a uniform
// factor from {1,2,3}, every type with `per_type_count` boxes.
// Deterministic for a fixed seed.
Instance generate_instance(int dimension, GeneratorType type, int num_types,
                           int per_type_count, std::uint64_t seed);

}  // namespace opack
