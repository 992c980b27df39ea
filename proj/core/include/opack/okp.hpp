#pragma once

#include <map>
#include <optional>
#include <vector>

#include "opack/heuristic.hpp"
#include "opack/knapsack.hpp"
#include "opack/opp.hpp"
#include "opack/scales.hpp"

namespace opack {

// Outer-tree node: per-type count bounds plus the inherited local upper
// bound.
struct OkpNode {
  std::vector<int> lower;
  std::vector<int> upper;
  std::int64_t upper_bound = 0;
  int depth = 0;
  std::uint64_t stamp = 0;

  bool is_leaf() const { return lower == upper; }
};

struct OkpCounters {
  std::uint64_t okp_nodes = 0;
  std::uint64_t opp_calls = 0;  // inner tree searches actually started
  std::uint64_t opp_nodes = 0;
};

enum class OkpStatus { Optimal, BoundsOnly };

struct OkpResult {
  OkpStatus status = OkpStatus::Optimal;
  std::int64_t best_value = 0;
  std::vector<int> witness;  // box ids of the best packing found
  Packing packing;
  std::int64_t upper_bound = 0;  // equals best_value when optimal
  OkpCounters counters;
};

struct OkpOptions {
  std::uint64_t seed = 1;
  int root_heuristic_rounds = 50;
  int node_heuristic_rounds = 10;
  // Reduction and stop-criterion switches; each one is individually sound.
  bool use_free_value = true;
  bool use_free_area = true;
  bool use_area_program = true;
  bool use_stop_bound = true;        // v_ub <= v_lb
  bool use_stop_upper_fits = true;   // upper set packs completely
  bool use_stop_lower_unfit = true;  // mandatory set cannot pack
  OppOptions opp;
};

std::int64_t value_of_counts(const Instance& instance, const std::vector<int>& counts);
std::vector<int> ids_of_counts(const Instance& instance, const std::vector<int>& counts);

// Count-bounded knapsack relaxation under one scale.
KnapsackProblem node_relaxation(const Instance& instance, const OkpNode& node,
                                const ConservativeScale& scale);

// Minimum over the scale family of the relaxation optima; nullopt when some
// relaxation cannot even place the mandatory boxes (node prunable). Not yet
// clipped by the parent bound.
std::optional<std::int64_t> node_upper_bound_raw(const Instance& instance, const OkpNode& node,
                                                 const std::vector<ConservativeScale>& family);

enum class ReduceVerdict { Kept, Pruned };

// Free Value, Free Area (wide scale family) and Area Program iterated to a
// fixpoint; prunes when a lower bound passes its upper bound.
ReduceVerdict reduce_node(const Instance& instance, OkpNode& node, std::int64_t v_lb,
                          const std::vector<ConservativeScale>& bound_family,
                          const std::vector<ConservativeScale>& wide_family,
                          const OkpOptions& options);

// One child per feasible count of the bulkiest unfixed type.
std::vector<OkpNode> branch_node(const Instance& instance, const OkpNode& node);

// Layered feasibility check for one subset given as a count vector: volume
// criterion, then the packing heuristic, then the exact inner search.
// Verdicts are cached per count vector for the lifetime of the decider.
class OppDecider {
 public:
  OppDecider(const Instance& instance, const OkpOptions& options, const SearchLimits& limits);

  enum class Status { Feasible, Infeasible, Timeout };
  struct Outcome {
    Status status = Status::Infeasible;
    Packing packing;  // for Feasible
  };

  const Outcome& decide(const std::vector<int>& counts);
  OkpCounters& counters() { return counters_; }

 private:
  const Instance& instance_;
  OkpOptions options_;
  SearchLimits limits_;
  std::vector<ConservativeScale> wide_family_;
  std::map<std::vector<int>, Outcome> cache_;
  Outcome timeout_;
  OkpCounters counters_;
};

OkpResult solve_okp(const Instance& instance, const SearchLimits& limits = {},
                    const OkpOptions& options = {});

}  // namespace opack
