#include "opack/heuristic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace opack {

namespace {

// Uniform on (0,1], independent of library distribution internals.
double draw_unit(std::mt19937_64& rng) {
  return (double)((rng() >> 11) + 1) * 0x1.0p-53;
}

struct PlacedBox {
  int id;
  std::vector<Extent> pos;
  const std::vector<Extent>* sizes;
};

bool fits(const Instance& instance, const std::vector<Extent>& pos,
          const std::vector<Extent>& sizes, const std::vector<PlacedBox>& placed) {
  for (int i = 0; i < instance.dim(); ++i)
    if (pos[i] + sizes[i] > instance.container(i)) return false;
  for (const PlacedBox& other : placed) {
    bool disjoint = false;
    for (int i = 0; i < instance.dim() && !disjoint; ++i)
      if (pos[i] + sizes[i] <= other.pos[i] || other.pos[i] + (*other.sizes)[i] <= pos[i])
        disjoint = true;
    if (!disjoint) return false;
  }
  return true;
}

}  // namespace

GreedyResult greedy_pack(const Instance& instance, const std::vector<int>& counts,
                         std::uint64_t seed, int rounds) {
  int m = instance.num_types();
  if ((int)counts.size() != m) throw std::invalid_argument("count vector size mismatch");
  for (int t = 0; t < m; ++t)
    if (counts[t] < 0 || counts[t] > instance.types()[t].count)
      throw std::invalid_argument("count exceeds type multiplicity");

  int total = 0;
  for (int t = 0; t < m; ++t) total += counts[t];

  std::mt19937_64 rng(seed);
  GreedyResult best;
  best.value = -1;  // round one always lands, value-zero boxes included
  for (int round = 0; round < rounds; ++round) {
    std::vector<int> order(m);
    for (int t = 0; t < m; ++t) order[t] = t;
    if (round == 0) {
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return instance.types()[a].value > instance.types()[b].value;
      });
    } else {
      std::vector<double> weighted(m);
      for (int t = 0; t < m; ++t) weighted[t] = (double)instance.types()[t].value * draw_unit(rng);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return weighted[a] > weighted[b]; });
    }

    std::set<std::vector<Extent>> points;
    points.insert(std::vector<Extent>(instance.dim(), 0));
    std::vector<PlacedBox> placed;
    std::vector<int> used(m, 0);
    std::int64_t value = 0;

    while (!points.empty() && (int)placed.size() < total) {
      std::vector<Extent> point = *points.begin();
      points.erase(points.begin());
      for (int t : order) {
        if (used[t] >= counts[t]) continue;
        const BoxType& type = instance.types()[t];
        if (!fits(instance, point, type.sizes, placed)) continue;
        int id = instance.first_id(t) + used[t];
        ++used[t];
        value += type.value;
        placed.push_back({id, point, &type.sizes});
        for (int i = 0; i < instance.dim(); ++i) {
          std::vector<Extent> next = point;
          next[i] += type.sizes[i];
          points.insert(std::move(next));
        }
        break;
      }
    }

    if (value > best.value) {
      best = GreedyResult{};
      best.value = value;
      for (const PlacedBox& p : placed) {
        best.packed_ids.push_back(p.id);
        best.packing[p.id] = p.pos;
      }
      best.packed_all = (int)placed.size() == total;
    }
    if (best.packed_all) break;  // nothing left to improve for feasibility callers
  }
  std::sort(best.packed_ids.begin(), best.packed_ids.end());
  return best;
}

}  // namespace opack
