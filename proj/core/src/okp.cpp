#include "opack/okp.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace opack {

namespace {

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

bool past(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  return deadline && now() >= *deadline;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::uint64_t counts_hash(const std::vector<int>& counts) {
  std::uint64_t h = 14695981039346656037ull;
  for (int c : counts) h = mix(h, (std::uint64_t)c);
  return h;
}

}  // namespace

std::int64_t value_of_counts(const Instance& instance, const std::vector<int>& counts) {
  std::int64_t v = 0;
  for (int t = 0; t < instance.num_types(); ++t)
    v += instance.types()[t].value * counts[t];
  return v;
}

std::vector<int> ids_of_counts(const Instance& instance, const std::vector<int>& counts) {
  std::vector<int> ids;
  for (int t = 0; t < instance.num_types(); ++t)
    for (int j = 0; j < counts[t]; ++j) ids.push_back(instance.first_id(t) + j);
  return ids;
}

KnapsackProblem node_relaxation(const Instance& instance, const OkpNode& node,
                                const ConservativeScale& scale) {
  KnapsackProblem problem;
  for (int t = 0; t < instance.num_types(); ++t) {
    KnapsackProblem::Item item;
    item.value = instance.types()[t].value;
    item.weight = scale.volume(instance, t);
    item.lower = node.lower[t];
    item.upper = node.upper[t];
    problem.items.push_back(std::move(item));
  }
  return problem;
}

std::optional<std::int64_t> node_upper_bound_raw(const Instance& instance, const OkpNode& node,
                                                 const std::vector<ConservativeScale>& family) {
  std::optional<std::int64_t> best;
  for (const ConservativeScale& scale : family) {
    auto solution = solve_bounded_knapsack(node_relaxation(instance, node, scale));
    if (!solution) return std::nullopt;  // mandatory boxes already overflow
    if (!best || solution->value < *best) best = solution->value;
  }
  return best;
}

ReduceVerdict reduce_node(const Instance& instance, OkpNode& node, std::int64_t v_lb,
                          const std::vector<ConservativeScale>& bound_family,
                          const std::vector<ConservativeScale>& wide_family,
                          const OkpOptions& options) {
  int m = instance.num_types();
  bool changed = true;
  while (changed) {
    changed = false;
    std::int64_t mandatory_value = value_of_counts(instance, node.lower);

    if (options.use_free_value) {
      for (int t = 0; t < m; ++t) {
        std::int64_t v = instance.types()[t].value;
        if (v == 0) continue;
        std::int64_t room = node.upper_bound - mandatory_value;
        if (room < 0) return ReduceVerdict::Pruned;
        int cap = node.lower[t] + (int)std::min<std::int64_t>(room / v, INT32_MAX);
        if (cap < node.upper[t]) {
          node.upper[t] = cap;
          changed = true;
          if (node.upper[t] < node.lower[t]) return ReduceVerdict::Pruned;
        }
      }
    }

    if (options.use_free_area) {
      std::vector<int> mandatory = ids_of_counts(instance, node.lower);
      for (const ConservativeScale& scale : wide_family) {
        Rational used = transformed_volume(instance, mandatory, scale);
        Rational slack = Rational(1) - used;
        if (slack < Rational(0)) return ReduceVerdict::Pruned;
        for (int t = 0; t < m; ++t) {
          if (node.upper[t] == node.lower[t]) continue;
          Rational piece = scale.volume(instance, t);
          if (piece.num() == 0) continue;
          std::int64_t extra = (slack / piece).floor();
          int cap = node.lower[t] + (int)std::min<std::int64_t>(extra, INT32_MAX);
          if (cap < node.upper[t]) {
            node.upper[t] = cap;
            changed = true;
            if (node.upper[t] < node.lower[t]) return ReduceVerdict::Pruned;
          }
        }
      }
    }

    if (options.use_area_program) {
      for (int t = 0; t < m; ++t) {
        if (node.lower[t] >= node.upper[t]) continue;
        // Pinning type t to its lower bound: if no scale allows a value
        // above the incumbent, better solutions need more of this type.
        bool some_scale_beats = false;
        for (const ConservativeScale& scale : bound_family) {
          KnapsackProblem problem = node_relaxation(instance, node, scale);
          problem.items[t].upper = node.lower[t];
          auto solution = solve_bounded_knapsack(problem);
          if (solution && solution->value > v_lb) {
            some_scale_beats = true;
            break;
          }
        }
        if (!some_scale_beats) {
          ++node.lower[t];
          changed = true;
          if (node.lower[t] > node.upper[t]) return ReduceVerdict::Pruned;
        }
      }
    }
  }
  return ReduceVerdict::Kept;
}

std::vector<OkpNode> branch_node(const Instance& instance, const OkpNode& node) {
  int pick = -1;
  Extent pick_size = -1;
  for (int t = 0; t < instance.num_types(); ++t) {
    if (node.lower[t] >= node.upper[t]) continue;
    Extent bulk = *std::max_element(instance.types()[t].sizes.begin(),
                                    instance.types()[t].sizes.end());
    if (bulk > pick_size) {
      pick_size = bulk;
      pick = t;
    }
  }
  if (pick < 0) throw std::logic_error("branch_node called on a leaf");

  std::vector<OkpNode> children;
  for (int count = node.lower[pick]; count <= node.upper[pick]; ++count) {
    OkpNode child = node;
    child.lower[pick] = count;
    child.upper[pick] = count;
    child.depth = node.depth + 1;
    children.push_back(std::move(child));
  }
  return children;
}

OppDecider::OppDecider(const Instance& instance, const OkpOptions& options,
                       const SearchLimits& limits)
    : instance_(instance), options_(options), limits_(limits),
      wide_family_(wide_scale_family(instance)) {}

const OppDecider::Outcome& OppDecider::decide(const std::vector<int>& counts) {
  auto it = cache_.find(counts);
  if (it != cache_.end()) return it->second;

  Outcome outcome;
  std::vector<int> ids = ids_of_counts(instance_, counts);
  if (ids.empty()) {
    outcome.status = Status::Feasible;
  } else if (volume_criterion(instance_, ids, wide_family_) == VolumeVerdict::Infeasible) {
    outcome.status = Status::Infeasible;
  } else {
    GreedyResult packed =
        greedy_pack(instance_, counts, mix(options_.seed, counts_hash(counts)), 10);
    if (packed.packed_all) {
      outcome.status = Status::Feasible;
      outcome.packing = std::move(packed.packing);
    } else {
      ++counters_.opp_calls;
      OppVerdict verdict = solve_opp(instance_, ids, limits_, options_.opp);
      counters_.opp_nodes += verdict.nodes;
      switch (verdict.status) {
        case OppStatus::Feasible:
          outcome.status = Status::Feasible;
          outcome.packing = std::move(*verdict.packing);
          break;
        case OppStatus::Infeasible:
          outcome.status = Status::Infeasible;
          break;
        case OppStatus::Timeout:
          outcome.status = Status::Timeout;
          break;
      }
      if (outcome.status == Status::Timeout) {
        timeout_ = std::move(outcome);  // timeouts stay out of the cache
        return timeout_;
      }
    }
  }
  return cache_.emplace(counts, std::move(outcome)).first->second;
}

OkpResult solve_okp(const Instance& instance, const SearchLimits& limits,
                    const OkpOptions& options) {
  if (instance.kind() == ProblemKind::Strip)
    throw std::invalid_argument("solve_okp needs a knapsack-valued instance");

  auto deadline = limits.effective_deadline();
  SearchLimits inner = limits;
  inner.deadline = deadline;
  inner.time_limit_s.reset();

  std::vector<ConservativeScale> bound_family = bound_scale_family(instance);
  std::vector<ConservativeScale> wide_family = wide_scale_family(instance);
  OppDecider decider(instance, options, inner);

  OkpResult result;
  result.best_value = 0;

  auto offer_witness = [&](std::int64_t value, const std::vector<int>& ids, Packing packing) {
    if (value <= result.best_value) return;
    if (validate_packing(instance, ids, packing))
      throw std::logic_error("candidate witness failed validation");
    result.best_value = value;
    result.witness = ids;
    result.packing = std::move(packing);
  };

  // Best-first: largest local upper bound, then deeper, then older.
  struct Entry {
    std::int64_t bound;
    int depth;
    std::uint64_t stamp;
    bool operator<(const Entry& o) const {
      if (bound != o.bound) return bound < o.bound;
      if (depth != o.depth) return depth < o.depth;
      return stamp > o.stamp;
    }
  };
  std::priority_queue<Entry> order;
  std::map<std::uint64_t, OkpNode> open;
  std::uint64_t next_stamp = 0;

  OkpNode root;
  root.lower.assign(instance.num_types(), 0);
  for (int t = 0; t < instance.num_types(); ++t)
    root.upper.push_back(instance.types()[t].count);
  root.upper_bound = instance.total_value();
  root.stamp = next_stamp++;
  order.push({root.upper_bound, root.depth, root.stamp});
  open.emplace(root.stamp, std::move(root));

  auto finish_bounds_only = [&]() {
    result.status = OkpStatus::BoundsOnly;
    result.upper_bound = result.best_value;
    while (!order.empty()) {
      auto it = open.find(order.top().stamp);
      if (it != open.end())
        result.upper_bound = std::max(result.upper_bound, it->second.upper_bound);
      order.pop();
    }
    result.counters.opp_calls = decider.counters().opp_calls;
    result.counters.opp_nodes = decider.counters().opp_nodes;
    return result;
  };

  while (!order.empty()) {
    if (past(deadline)) return finish_bounds_only();
    Entry top = order.top();
    order.pop();
    auto it = open.find(top.stamp);
    if (it == open.end()) continue;
    OkpNode node = std::move(it->second);
    open.erase(it);
    ++result.counters.okp_nodes;

    if (options.use_stop_bound && node.upper_bound <= result.best_value) continue;

    // Lower bound: try to pack the node's whole upper set.
    int rounds = node.depth == 0 ? options.root_heuristic_rounds : options.node_heuristic_rounds;
    GreedyResult packed =
        greedy_pack(instance, node.upper, mix(options.seed, node.stamp), rounds);
    if (packed.value > result.best_value)
      offer_witness(packed.value, packed.packed_ids, packed.packing);
    if (packed.packed_all && options.use_stop_upper_fits) continue;  // upper set is optimal here

    auto raw = node_upper_bound_raw(instance, node, bound_family);
    if (!raw) continue;
    node.upper_bound =
        std::min({node.upper_bound, *raw, value_of_counts(instance, node.upper)});
    if (options.use_stop_bound && node.upper_bound <= result.best_value) continue;

    if (reduce_node(instance, node, result.best_value, bound_family, wide_family, options) ==
        ReduceVerdict::Pruned)
      continue;
    node.upper_bound = std::min(node.upper_bound, value_of_counts(instance, node.upper));
    if (options.use_stop_bound && node.upper_bound <= result.best_value) continue;

    if (options.use_stop_lower_unfit) {
      bool has_mandatory = false;
      for (int c : node.lower) has_mandatory |= c > 0;
      if (has_mandatory) {
        const auto& outcome = decider.decide(node.lower);
        if (outcome.status == OppDecider::Status::Timeout) return finish_bounds_only();
        if (outcome.status == OppDecider::Status::Infeasible) continue;
      }
    }

    if (node.is_leaf()) {
      const auto& outcome = decider.decide(node.lower);
      if (outcome.status == OppDecider::Status::Timeout) return finish_bounds_only();
      if (outcome.status == OppDecider::Status::Feasible) {
        std::int64_t value = value_of_counts(instance, node.lower);
        if (value > result.best_value)
          offer_witness(value, ids_of_counts(instance, node.lower), outcome.packing);
      }
      continue;
    }

    for (OkpNode& child : branch_node(instance, node)) {
      child.upper_bound = std::min(node.upper_bound, value_of_counts(instance, child.upper));
      child.stamp = next_stamp++;
      order.push({child.upper_bound, child.depth, child.stamp});
      open.emplace(child.stamp, std::move(child));
    }
  }

  result.status = OkpStatus::Optimal;
  result.upper_bound = result.best_value;
  result.counters.opp_calls = decider.counters().opp_calls;
  result.counters.opp_nodes = decider.counters().opp_nodes;
  return result;
}

}  // namespace opack
