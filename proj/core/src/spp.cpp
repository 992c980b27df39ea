#include "opack/spp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace opack {

namespace {

bool past(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  return deadline && std::chrono::steady_clock::now() >= *deadline;
}

// Transformed base volume weighted by height: for any conservative scale of
// the base directions, the packed height is at least the sum over boxes of
// (scaled base volume) * height.
Extent scale_height_bound(const Instance& instance, const ConservativeScale& scale) {
  int h_dir = instance.dim() - 1;
  Rational sum(0);
  for (const Box& box : instance.boxes()) {
    Rational cross(1);
    for (int i = 0; i < h_dir; ++i) cross *= scale.width(instance, box, i);
    sum += cross * Rational(box.sizes[h_dir]);
  }
  return sum.ceil();
}

}  // namespace

std::vector<Extent> normal_heights(const Instance& instance) {
  int h_dir = instance.dim() - 1;
  Extent total = 0;
  Extent max_single = 0;
  for (const Box& box : instance.boxes()) {
    total += box.sizes[h_dir];
    max_single = std::max(max_single, box.sizes[h_dir]);
  }
  if (total > (1 << 24)) throw std::invalid_argument("height sum too large for normal coordinates");

  std::vector<char> reachable((size_t)total + 1, 0);
  reachable[0] = 1;
  for (const Box& box : instance.boxes()) {
    Extent h = box.sizes[h_dir];
    for (Extent s = total; s >= h; --s)
      if (reachable[s - h]) reachable[s] = 1;
  }
  std::vector<Extent> heights;
  for (Extent s = max_single; s <= total; ++s)
    if (reachable[s]) heights.push_back(s);
  return heights;
}

SppResult solve_spp(const Instance& instance, const SearchLimits& limits,
                    const SppOptions& options) {
  int h_dir = instance.dim() - 1;
  auto deadline = limits.effective_deadline();
  SearchLimits inner = limits;
  inner.deadline = deadline;
  inner.time_limit_s.reset();

  Extent total_height = 0;
  Extent max_single = 0;
  for (const Box& box : instance.boxes()) {
    total_height += box.sizes[h_dir];
    max_single = std::max(max_single, box.sizes[h_dir]);
  }
  std::vector<int> full_counts;
  for (const BoxType& t : instance.types()) full_counts.push_back(t.count);

  SppResult result;

  // Heuristic start in a strip tall enough for plain stacking.
  std::vector<Extent> tall = instance.container();
  tall[h_dir] = total_height;
  Instance tall_instance = instance.with_container(tall);
  GreedyResult start = greedy_pack(tall_instance, full_counts, options.seed, 50);
  if (!start.packed_all) {
    // Stack everything in one column; always fits the tall strip.
    start = GreedyResult{};
    Extent top = 0;
    for (const Box& box : instance.boxes()) {
      std::vector<Extent> pos(instance.dim(), 0);
      pos[h_dir] = top;
      top += box.sizes[h_dir];
      start.packing[box.id] = pos;
      start.packed_ids.push_back(box.id);
    }
    start.packed_all = true;
  }
  Extent h = 0;
  for (const auto& [id, pos] : start.packing)
    h = std::max(h, pos[h_dir] + instance.box(id).sizes[h_dir]);
  result.packing = std::move(start.packing);
  result.best_height = h;

  // Lower bound: tallest box, plus height-weighted volume bounds under the
  // base-direction conservative scales (identity included).
  Extent lower = max_single;
  {
    std::vector<ConservativeScale> family{ConservativeScale::identity()};
    for (int i = 0; i < h_dir; ++i) {
      int max_k = (int)(instance.container(i) / 2);
      for (int k = 1; k <= max_k; ++k) family.push_back(ConservativeScale::dff(i, k));
    }
    for (const ConservativeScale& scale : family)
      lower = std::max(lower, scale_height_bound(instance, scale));
  }
  result.lower_bound = lower;

  std::vector<Extent> heights = normal_heights(instance);
  std::map<Extent, bool> verdicts;  // height -> feasible; infeasible is monotone downward

  auto feasible_at = [&](Extent height, Packing* packing) -> std::optional<bool> {
    auto cached = verdicts.lower_bound(height);
    if (cached != verdicts.end() && !cached->second) return false;  // dismissed at this height or above
    std::vector<Extent> box_dims = instance.container();
    box_dims[h_dir] = height;
    Instance candidate = instance.with_container(box_dims);
    std::vector<int> all_ids(instance.num_boxes());
    std::iota(all_ids.begin(), all_ids.end(), 0);

    bool feasible;
    if (volume_criterion(candidate, all_ids, wide_scale_family(candidate)) ==
        VolumeVerdict::Infeasible) {
      feasible = false;
    } else {
      GreedyResult packed = greedy_pack(candidate, full_counts, options.seed + height, 10);
      if (packed.packed_all) {
        feasible = true;
        if (packing) *packing = std::move(packed.packing);
      } else {
        ++result.counters.opp_calls;
        OppVerdict verdict = solve_opp(candidate, all_ids, inner, options.opp);
        result.counters.opp_nodes += verdict.nodes;
        if (verdict.status == OppStatus::Timeout) return std::nullopt;
        feasible = verdict.status == OppStatus::Feasible;
        if (feasible && packing) *packing = std::move(*verdict.packing);
      }
    }
    verdicts[height] = feasible;
    return feasible;
  };

  while (result.best_height > lower) {
    if (past(deadline)) {
      result.status = SppStatus::Bounds;
      return result;
    }
    // Largest candidate strictly below the incumbent.
    Extent next = -1;
    for (auto it = std::upper_bound(heights.begin(), heights.end(), result.best_height);
         it != heights.begin();) {
      --it;
      if (*it < result.best_height) { next = *it; break; }
    }
    if (next < lower) break;

    Packing packing;
    auto verdict = feasible_at(next, &packing);
    if (!verdict) {
      result.status = SppStatus::Bounds;
      return result;
    }
    if (*verdict) {
      result.best_height = next;
      result.packing = std::move(packing);
    } else {
      result.lower_bound = result.best_height;  // next is certified infeasible
      break;
    }
  }
  if (result.best_height <= lower) result.lower_bound = result.best_height;

  result.status = SppStatus::Optimal;
  result.lower_bound = result.best_height;
  return result;
}

}  // namespace opack
