#include "opack/knapsack.hpp"

#include <algorithm>
#include <numeric>

namespace opack {

namespace {

constexpr std::int64_t kDpCapacityLimit = 1'000'000;

struct ScaledItem {
  std::int64_t weight = 0;
  std::int64_t value = 0;
  int extra = 0;  // upper - lower
  int index = 0;
};

std::optional<KnapsackSolution> solve_dp(const std::vector<ScaledItem>& items,
                                         std::int64_t capacity, size_t m) {
  // Bounded counts via binary splitting, take-bits kept for the witness.
  struct Piece {
    int item;
    int multiplier;
    std::int64_t weight;
    std::int64_t value;
  };
  std::vector<Piece> pieces;
  for (const ScaledItem& it : items) {
    int left = it.extra;
    int mult = 1;
    while (left > 0) {
      int take = std::min(mult, left);
      pieces.push_back({it.index, take, it.weight * take, it.value * take});
      left -= take;
      mult *= 2;
    }
  }

  size_t cap = (size_t)capacity + 1;
  std::vector<std::int64_t> best(cap, 0);
  std::vector<std::vector<char>> taken(pieces.size(), std::vector<char>(cap, 0));
  for (size_t p = 0; p < pieces.size(); ++p) {
    const Piece& piece = pieces[p];
    for (std::int64_t c = capacity; c >= piece.weight; --c) {
      std::int64_t candidate = best[c - piece.weight] + piece.value;
      if (candidate > best[c]) {
        best[c] = candidate;
        taken[p][c] = 1;
      }
    }
  }

  KnapsackSolution out;
  out.counts.assign(m, 0);
  out.value = best[capacity];
  std::int64_t c = capacity;
  for (size_t p = pieces.size(); p-- > 0;) {
    if (taken[p][c]) {
      out.counts[pieces[p].item] += pieces[p].multiplier;
      c -= pieces[p].weight;
    }
  }
  return out;
}

std::optional<KnapsackSolution> solve_branch_and_bound(std::vector<ScaledItem> items,
                                                       std::int64_t capacity, size_t m) {
  // Zero-weight items contribute for free.
  std::int64_t free_value = 0;
  std::vector<std::pair<int, int>> free_counts;
  std::erase_if(items, [&](const ScaledItem& it) {
    if (it.weight > 0) return false;
    free_value += (std::int64_t)it.extra * it.value;
    free_counts.push_back({it.index, it.extra});
    return true;
  });
  std::stable_sort(items.begin(), items.end(), [](const ScaledItem& a, const ScaledItem& b) {
    return (__int128)a.value * b.weight > (__int128)b.value * a.weight;
  });

  std::int64_t best_value = -1;
  std::vector<int> best_take;
  std::vector<int> take(items.size(), 0);

  // Greedy fractional relaxation in density order; exact integer arithmetic
  // so the bound never undercuts the optimum.
  auto upper_bound = [&](size_t from, std::int64_t cap_left) -> std::int64_t {
    __int128 bound = 0;
    for (size_t t = from; t < items.size(); ++t) {
      const ScaledItem& it = items[t];
      std::int64_t fit = std::min<std::int64_t>(it.extra, cap_left / it.weight);
      bound += (__int128)fit * it.value;
      cap_left -= fit * it.weight;
      if (fit < it.extra) {
        bound += ((__int128)cap_left * it.value) / it.weight;
        break;
      }
    }
    return bound > INT64_MAX ? INT64_MAX : (std::int64_t)bound;
  };

  auto dfs = [&](auto&& self, size_t t, std::int64_t cap_left, std::int64_t value) -> void {
    if (t == items.size()) {
      if (value > best_value) {
        best_value = value;
        best_take = take;
      }
      return;
    }
    if (value + upper_bound(t, cap_left) <= best_value) return;
    const ScaledItem& it = items[t];
    int max_take = (int)std::min<std::int64_t>(it.extra, cap_left / it.weight);
    for (int n = max_take; n >= 0; --n) {
      take[t] = n;
      self(self, t + 1, cap_left - (std::int64_t)n * it.weight, value + (std::int64_t)n * it.value);
    }
    take[t] = 0;
  };
  dfs(dfs, 0, capacity, 0);

  KnapsackSolution out;
  out.counts.assign(m, 0);
  out.value = best_value + free_value;
  for (size_t t = 0; t < items.size(); ++t) out.counts[items[t].index] = best_take[t];
  for (auto [index, extra] : free_counts) out.counts[index] = extra;
  return out;
}

}  // namespace

std::optional<KnapsackSolution> solve_bounded_knapsack(const KnapsackProblem& problem) {
  size_t m = problem.items.size();
  std::int64_t denom = 1;
  for (const auto& item : problem.items) denom = lcm64(denom, item.weight.den());

  std::vector<ScaledItem> items;
  std::int64_t base_weight = 0;
  std::int64_t base_value = 0;
  for (size_t t = 0; t < m; ++t) {
    const auto& item = problem.items[t];
    std::int64_t w = item.weight.num() * (denom / item.weight.den());
    base_weight += w * item.lower;
    base_value += (std::int64_t)item.value * item.lower;
    if (item.upper > item.lower)
      items.push_back({w, item.value, item.upper - item.lower, (int)t});
  }
  if (base_weight > denom) return std::nullopt;  // even the lower bounds overflow
  std::int64_t residual = denom - base_weight;

  auto extras = denom <= kDpCapacityLimit ? solve_dp(items, residual, m)
                                          : solve_branch_and_bound(std::move(items), residual, m);
  KnapsackSolution out = std::move(*extras);
  out.value += base_value;
  for (size_t t = 0; t < m; ++t) out.counts[t] += problem.items[t].lower;
  return out;
}

}  // namespace opack
