#pragma once

#include <optional>
#include <vector>

#include "opack/rational.hpp"

namespace opack {

// Bounded one-dimensional knapsack with rational weights and capacity 1:
// maximize value . xi subject to weight . xi <= 1, lower <= xi <= upper.
struct KnapsackProblem {
  struct Item {
    std::int64_t value = 0;
    Rational weight;
    int lower = 0;
    int upper = 0;
  };
  std::vector<Item> items;
};

struct KnapsackSolution {
  std::int64_t value = 0;
  std::vector<int> counts;
};

// Exact optimum with a witness count vector, or nullopt when the lower
// bounds alone exceed the capacity. Deterministic: dynamic programming over
// the scaled capacity when it stays small, depth-first branch-and-bound
// with the fractional bound otherwise.
std::optional<KnapsackSolution> solve_bounded_knapsack(const KnapsackProblem& problem);

}  // namespace opack
