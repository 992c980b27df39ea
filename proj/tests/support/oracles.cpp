#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace opack::oracle {

namespace {

struct PlacementSearch {
  const Instance& instance;
  std::vector<int> boxes;  // ids, fixed placement order
  std::vector<std::vector<Extent>> candidates;  // per direction, shared sums
  std::vector<std::vector<Extent>> pos;
  std::vector<char> placed;
  std::uint64_t steps = 0;
  std::uint64_t budget = 0;

  bool overlaps(int a, int b) const {
    for (int i = 0; i < instance.dim(); ++i) {
      const Box& ba = instance.box(boxes[a]);
      const Box& bb = instance.box(boxes[b]);
      if (pos[a][i] + ba.sizes[i] <= pos[b][i] || pos[b][i] + bb.sizes[i] <= pos[a][i])
        return false;
    }
    return true;
  }

  bool place(size_t k) {
    if (++steps > budget) throw std::runtime_error("placement oracle budget exceeded");
    if (k == boxes.size()) return true;
    const Box& box = instance.box(boxes[k]);
    std::vector<std::vector<Extent>> coords(instance.dim());
    for (int i = 0; i < instance.dim(); ++i)
      for (Extent c : candidates[i])
        if (c + box.sizes[i] <= instance.container(i)) coords[i].push_back(c);

    // Equal boxes are interchangeable; force lexicographic positions.
    std::vector<Extent> floor_pos;
    if (k > 0 && instance.box(boxes[k - 1]).sizes == box.sizes) floor_pos = pos[k - 1];

    std::vector<int> index(instance.dim(), 0);
    std::vector<Extent> point(instance.dim());
    auto walk = [&](auto&& self, int dim) -> bool {
      if (dim == instance.dim()) {
        if (!floor_pos.empty() && point < floor_pos) return false;
        pos[k] = point;
        for (size_t j = 0; j < k; ++j)
          if (overlaps((int)k, (int)j)) return false;
        return place(k + 1);
      }
      for (Extent c : coords[dim]) {
        point[dim] = c;
        if (self(self, dim + 1)) return true;
      }
      return false;
    };
    return walk(walk, 0);
  }
};

}  // namespace

std::optional<Packing> brute_force_opp(const Instance& instance, const std::vector<int>& subset,
                                       const PlacementGuard& guard) {
  if ((int)subset.size() > guard.max_boxes)
    throw std::invalid_argument("placement oracle: too many boxes");
  for (int i = 0; i < instance.dim(); ++i)
    if (instance.container(i) > guard.max_extent)
      throw std::invalid_argument("placement oracle: container too large");

  // Volume precheck: cheap and decides many infeasible cases.
  __int128 volume = 0, space = 1;
  for (int id : subset) {
    __int128 v = 1;
    for (int i = 0; i < instance.dim(); ++i) v *= instance.box(id).sizes[i];
    volume += v;
  }
  for (int i = 0; i < instance.dim(); ++i) space *= instance.container(i);
  if (volume > space) return std::nullopt;

  PlacementSearch search{instance, subset, {}, {}, {}, 0, guard.step_budget};
  // Big boxes first; identical boxes stay adjacent for symmetry breaking.
  std::sort(search.boxes.begin(), search.boxes.end(), [&](int a, int b) {
    __int128 va = 1, vb = 1;
    for (int i = 0; i < instance.dim(); ++i) {
      va *= instance.box(a).sizes[i];
      vb *= instance.box(b).sizes[i];
    }
    if (va != vb) return va > vb;
    if (instance.box(a).sizes != instance.box(b).sizes)
      return instance.box(a).sizes < instance.box(b).sizes;
    return a < b;
  });

  search.candidates.resize(instance.dim());
  for (int i = 0; i < instance.dim(); ++i) {
    std::set<Extent> sums{0};
    for (int id : subset) {
      std::set<Extent> next = sums;
      for (Extent s : sums) {
        Extent v = s + instance.box(id).sizes[i];
        if (v < instance.container(i)) next.insert(v);
      }
      sums = std::move(next);
    }
    search.candidates[i].assign(sums.begin(), sums.end());
  }
  search.pos.assign(subset.size(), std::vector<Extent>(instance.dim(), 0));

  if (!search.place(0)) return std::nullopt;
  Packing packing;
  for (size_t k = 0; k < search.boxes.size(); ++k) packing[search.boxes[k]] = search.pos[k];
  return packing;
}

std::optional<std::int64_t> brute_force_knapsack(const KnapsackProblem& problem,
                                                 std::uint64_t max_points) {
  std::uint64_t points = 1;
  for (const auto& item : problem.items) {
    points *= (std::uint64_t)(item.upper - item.lower + 1);
    if (points > max_points) throw std::invalid_argument("knapsack oracle: range too large");
  }
  std::vector<int> counts;
  for (const auto& item : problem.items) counts.push_back(item.lower);

  std::optional<std::int64_t> best;
  while (true) {
    Rational weight(0);
    std::int64_t value = 0;
    for (size_t t = 0; t < counts.size(); ++t) {
      weight += problem.items[t].weight * Rational(counts[t]);
      value += problem.items[t].value * counts[t];
    }
    if (weight <= Rational(1) && (!best || value > *best)) best = value;
    size_t t = 0;
    while (t < counts.size() && counts[t] == problem.items[t].upper)
      counts[t] = problem.items[t].lower, ++t;
    if (t == counts.size()) break;
    ++counts[t];
  }
  return best;
}

std::int64_t brute_force_okp(const Instance& instance, const PlacementGuard& guard) {
  std::vector<int> counts(instance.num_types(), 0);
  std::int64_t best = 0;
  while (true) {
    std::vector<int> ids;
    std::int64_t value = 0;
    for (int t = 0; t < instance.num_types(); ++t)
      for (int j = 0; j < counts[t]; ++j) {
        ids.push_back(instance.first_id(t) + j);
        value += instance.types()[t].value;
      }
    if (value > best && brute_force_opp(instance, ids, guard)) best = value;
    int t = 0;
    while (t < instance.num_types() && counts[t] == instance.types()[t].count)
      counts[t] = 0, ++t;
    if (t == instance.num_types()) break;
    ++counts[t];
  }
  return best;
}

Extent brute_force_strip_height(const Instance& instance, const PlacementGuard& guard) {
  int h_dir = instance.dim() - 1;
  Extent total = 0;
  for (const Box& box : instance.boxes()) total += box.sizes[h_dir];
  std::vector<int> all(instance.num_boxes());
  std::iota(all.begin(), all.end(), 0);
  for (Extent h = 1; h <= total; ++h) {
    bool tall_enough = true;
    for (const Box& box : instance.boxes())
      if (box.sizes[h_dir] > h) tall_enough = false;
    if (!tall_enough) continue;
    std::vector<Extent> container = instance.container();
    container[h_dir] = h;
    PlacementGuard relaxed = guard;
    relaxed.max_extent = std::max(guard.max_extent, total);
    if (brute_force_opp(instance.with_container(container), all, relaxed)) return h;
  }
  return total;
}

bool brute_force_is_comparability(const Graph& g) {
  auto edges = g.edges();
  size_t m = edges.size();
  if (m == 0) return true;
  if (m > 24) throw std::invalid_argument("orientation oracle: too many edges");
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    Orientation orientation(g.n);
    for (size_t e = 0; e < m; ++e) {
      if (mask >> e & 1)
        orientation.orient(edges[e].first, edges[e].second);
      else
        orientation.orient(edges[e].second, edges[e].first);
    }
    if (orientation.is_transitive(g)) return true;
  }
  return false;
}

std::int64_t brute_force_max_weight_clique(const Graph& g,
                                           const std::vector<std::int64_t>& weights) {
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    std::int64_t w = 0;
    bool clique = true;
    for (int a = 0; a < g.n && clique; ++a) {
      if (!(mask >> a & 1)) continue;
      w += weights[a];
      for (int b = a + 1; b < g.n && clique; ++b)
        if ((mask >> b & 1) && !g.has_edge(a, b)) clique = false;
    }
    if (clique) best = std::max(best, w);
  }
  return best;
}

bool brute_force_has_induced_c4(const Graph& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        for (int d = c + 1; d < g.n; ++d) {
          int v[4] = {a, b, c, d};
          // Three ways to split four vertices into two opposite pairs.
          int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
          for (auto& p : pairings) {
            int w = v[p[0]], x = v[p[1]], y = v[p[2]], z = v[p[3]];
            // Cycle w-y-x-z with chords wx and yz.
            if (g.has_edge(w, y) && g.has_edge(y, x) && g.has_edge(x, z) && g.has_edge(z, w) &&
                !g.has_edge(w, x) && !g.has_edge(y, z))
              return true;
          }
        }
  return false;
}

bool naive_packing_ok(const Instance& instance, const std::vector<int>& subset,
                      const Packing& packing) {
  if (packing.size() != subset.size()) return false;
  for (int id : subset) {
    auto it = packing.find(id);
    if (it == packing.end()) return false;
    for (int i = 0; i < instance.dim(); ++i) {
      if (it->second[i] < 0) return false;
      if (it->second[i] + instance.box(id).sizes[i] > instance.container(i)) return false;
    }
  }
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b) {
      const auto& pa = packing.at(subset[a]);
      const auto& pb = packing.at(subset[b]);
      bool separated = false;
      for (int i = 0; i < instance.dim(); ++i) {
        Extent ea = pa[i] + instance.box(subset[a]).sizes[i];
        Extent eb = pb[i] + instance.box(subset[b]).sizes[i];
        if (ea <= pb[i] || eb <= pa[i]) separated = true;
      }
      if (!separated) return false;
    }
  return true;
}

Instance random_instance(std::mt19937_64& rng, int dim, Extent max_extent, int max_boxes,
                         bool knapsack_values) {
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + (std::int64_t)(rng() % (std::uint64_t)(hi - lo + 1));
  };
  std::vector<Extent> container(dim);
  for (int i = 0; i < dim; ++i) container[i] = draw(3, max_extent);
  int boxes = (int)draw(1, max_boxes);
  std::vector<BoxType> types;
  int made = 0;
  while (made < boxes) {
    BoxType t;
    for (int i = 0; i < dim; ++i) t.sizes.push_back(draw(1, container[i]));
    t.count = (int)draw(1, boxes - made);
    t.value = knapsack_values ? draw(1, 50) : 1;
    made += t.count;
    types.push_back(std::move(t));
  }
  return Instance(dim, std::move(container), std::move(types));
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

}  // namespace opack::oracle
