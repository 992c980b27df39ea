#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "opack/packing_class.hpp"
#include "opack/search_info.hpp"

namespace opack {

struct SearchLimits {
  std::optional<std::uint64_t> node_cap;
  std::optional<double> time_limit_s;
  // Absolute deadline; set by outer searches so inner calls share a budget.
  std::optional<std::chrono::steady_clock::time_point> deadline;

  std::optional<std::chrono::steady_clock::time_point> effective_deadline() const {
    auto d = deadline;
    if (time_limit_s) {
      auto t = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(*time_limit_s));
      if (!d || t < *d) d = t;
    }
    return d;
  }
};

struct OppOptions {
  bool use_avoid_c4 = true;
  bool use_avoid_cliques = true;
  bool use_twin_exclusion = true;
  bool use_type_cliques = true;
  // Hook for conservative-scale pruning on shallow nodes; absent by default.
  // Returning true dismisses the node.
  std::function<bool(const BoxSubset&, const SearchInfo&, int depth)> shallow_prune;
  int shallow_prune_max_depth = 5;
};

enum class OppStatus { Feasible, Infeasible, Timeout };

struct OppVerdict {
  OppStatus status = OppStatus::Infeasible;
  std::optional<PackingClass> packing_class;  // Feasible only
  std::optional<Packing> packing;             // Feasible only
  std::uint64_t nodes = 0;
};

enum class PropResult { Ok, Exit };

// P3 bookkeeping for a drained (+) triple: no free direction left kills the
// node, exactly one forces the exclusion there.
PropResult check_p3(SearchInfo& info, const Augmentation& aug);

// Fixes edges whose state is forced by an induced C4 among required edges
// with excluded chords; the drained triple is a cycle edge for sigma = + and
// a chord for sigma = -.
PropResult avoid_c4(SearchInfo& info, const Augmentation& aug);

// For a drained (-) triple e = bc: the heaviest excluded clique through e
// must fit direction i, and overweight sets whose unfixed edges are all
// indistinguishable force an overlap.
PropResult avoid_cliques(const BoxSubset& boxes, SearchInfo& info, const Augmentation& aug);

// Root initialization or one augmentation, then propagation to a fixpoint
// through check_p3 / avoid_c4 / avoid_cliques. For sigma = -, every edge
// indistinguishable from the input edge is excluded along with it.
PropResult update_searchinfo(const BoxSubset& boxes, const std::optional<Augmentation>& aug,
                             SearchInfo& info, const OppOptions& options = {});

// The exact decision solver: depth-first search over packing classes.
OppVerdict solve_opp(const Instance& instance, const std::vector<int>& subset,
                     const SearchLimits& limits = {}, const OppOptions& options = {});

}  // namespace opack
