#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "opack/graph.hpp"
#include "opack/instance.hpp"
#include "opack/knapsack.hpp"

// Brute-force reference deciders, independent of the solver code paths they
// check. Test-only.
namespace opack::oracle {

struct PlacementGuard {
  int max_boxes = 6;
  Extent max_extent = 20;
  std::uint64_t step_budget = 200'000'000;
};

// Exhaustive placement search over normal coordinates: every coordinate is 0
// or a sum of other boxes' sizes in that direction. Any packing can be
// pushed box by box to its minimal position, which lands on such a sum, so
// searching these grids is complete. Returns a packing or nullopt.
std::optional<Packing> brute_force_opp(const Instance& instance, const std::vector<int>& subset,
                                       const PlacementGuard& guard = {});

// Exhaustive enumeration over count vectors; guard on the product of ranges.
std::optional<std::int64_t> brute_force_knapsack(const KnapsackProblem& problem,
                                                 std::uint64_t max_points = 1'000'000);

// Exhaustive OKP: maximize value over all count vectors whose boxes pack.
std::int64_t brute_force_okp(const Instance& instance, const PlacementGuard& guard = {});

// Smallest strip height packing all boxes (base directions fixed).
Extent brute_force_strip_height(const Instance& instance, const PlacementGuard& guard = {});

// Comparability by trying every orientation of the edge set (n small).
bool brute_force_is_comparability(const Graph& g);

std::int64_t brute_force_max_weight_clique(const Graph& g,
                                           const std::vector<std::int64_t>& weights);

bool brute_force_has_induced_c4(const Graph& g);

// Independent O(n^2 d) packing check used to cross-validate validate_packing.
bool naive_packing_ok(const Instance& instance, const std::vector<int>& subset,
                      const Packing& packing);

// Random small instances for the oracle-equivalence corpora.
Instance random_instance(std::mt19937_64& rng, int dim, Extent max_extent, int max_boxes,
                         bool knapsack_values);

// All graphs on n vertices, one per edge-subset bitmask.
Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace opack::oracle
