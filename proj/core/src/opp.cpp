#include "opack/opp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace opack {

namespace {

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

// Max-weight clique search inside the excluded graph of one direction,
// restricted to the vertex list `members`. Exact for at most four vertices
// (brute force) and for comparability graphs; greedy otherwise.
struct ExcludedCliqueFinder {
  const SearchInfo& info;
  const BoxSubset& boxes;
  int direction;

  struct Result {
    std::vector<int> vertices;
    std::int64_t weight = 0;
  };

  bool excluded(int u, int v) const { return info.is_excluded(u, v, direction); }

  Result find(const std::vector<int>& members) const {
    Result best;
    int k = (int)members.size();
    if (k == 0) return best;
    if (k <= 4) {
      for (int mask = 1; mask < (1 << k); ++mask) {
        std::int64_t w = 0;
        bool clique = true;
        for (int a = 0; a < k && clique; ++a) {
          if (!(mask >> a & 1)) continue;
          w += boxes.width(members[a], direction);
          for (int b = a + 1; b < k && clique; ++b)
            if ((mask >> b & 1) && !excluded(members[a], members[b])) clique = false;
        }
        if (clique && w > best.weight) {
          best.weight = w;
          best.vertices.clear();
          for (int a = 0; a < k; ++a)
            if (mask >> a & 1) best.vertices.push_back(members[a]);
        }
      }
      return best;
    }

    Graph induced(k);
    std::vector<std::int64_t> weights(k);
    for (int a = 0; a < k; ++a) {
      weights[a] = boxes.width(members[a], direction);
      for (int b = a + 1; b < k; ++b)
        if (excluded(members[a], members[b])) induced.add_edge(a, b);
    }
    auto recognition = recognize_comparability(induced);
    std::vector<int> local;
    if (auto* orientation = std::get_if<Orientation>(&recognition)) {
      WeightedClique clique = max_weight_clique_comparability(induced, *orientation, weights);
      local = clique.vertices;
      best.weight = clique.weight;
    } else {
      local = greedy_clique_extend(induced, {}, weights);
      for (int v : local) best.weight += weights[v];
    }
    for (int v : local) best.vertices.push_back(members[v]);
    return best;
  }
};

// Lazily computed indistinguishability rows for one propagation step.
struct IndRows {
  const SearchInfo& info;
  const BoxSubset& boxes;
  std::map<int, std::vector<char>> rows;

  const std::vector<char>& row(int v) {
    auto it = rows.find(v);
    if (it != rows.end()) return it->second;
    std::vector<char> r(info.n(), 0);
    for (int z = 0; z < info.n(); ++z)
      r[z] = indistinguishable_boxes(info, boxes, v, z) ? 1 : 0;
    return rows.emplace(v, std::move(r)).first->second;
  }
  bool ind(int a, int b) { return a == b || row(a)[b] != 0; }
};

}  // namespace

PropResult check_p3(SearchInfo& info, const Augmentation& aug) {
  if (aug.sigma != Sigma::Plus) return PropResult::Ok;
  int free_dir = -1;
  int not_required = 0;
  for (int k = 0; k < info.dim(); ++k) {
    if (!info.is_required(aug.u, aug.v, k)) {
      ++not_required;
      free_dir = k;
    }
  }
  if (not_required == 0) return PropResult::Exit;
  if (not_required == 1 && !info.apply(aug.u, aug.v, Sigma::Minus, free_dir))
    return PropResult::Exit;
  return PropResult::Ok;
}

PropResult avoid_c4(SearchInfo& info, const Augmentation& aug) {
  const int i = aug.direction;
  const int n = info.n();
  const int words = info.required(i).words();

  auto required_row = [&](int v) { return info.required(i).row(v); };

  if (aug.sigma == Sigma::Plus) {
    // e is a cycle edge of a threatening C4 (p, q, u, v) with cycle edges
    // pq, qu, uv, vp and chords pu, qv. Both endpoint orders of e matter.
    const int ends[2][2] = {{aug.u, aug.v}, {aug.v, aug.u}};
    for (const auto& pq : ends) {
      int p = pq[0], q = pq[1];
      std::vector<int> qs;  // u with qu required
      for_each_bit(required_row(q), words, [&](int u) { if (u != p) qs.push_back(u); });
      for (int u : qs) {
        if (!info.is_excluded(p, u, i)) continue;
        // Chord pu is excluded. Scan v along required edges.
        std::vector<int> vs;
        for_each_bit(required_row(p), words, [&](int v) { if (v != q && v != u) vs.push_back(v); });
        for (int v : vs) {
          if (!info.is_excluded(q, v, i)) {
            // Full cycle with one excluded chord forces the other chord.
            if (info.is_required(u, v, i) && info.is_free(q, v, i))
              if (!info.apply(q, v, Sigma::Plus, i)) return PropResult::Exit;
            continue;
          }
          // Both chords excluded; uv closes the cycle.
          EdgeState s = info.state(u, v, i);
          if (s == EdgeState::Required) return PropResult::Exit;
          if (s == EdgeState::Free && !info.apply(u, v, Sigma::Minus, i))
            return PropResult::Exit;
        }
        // f adjacent to e: cycle edges pq, qu, uv all required, f = vp.
        std::vector<int> us;
        for_each_bit(required_row(u), words, [&](int v) { if (v != p && v != q) us.push_back(v); });
        for (int v : us) {
          if (!info.is_excluded(q, v, i)) continue;
          EdgeState s = info.state(v, p, i);
          if (s == EdgeState::Required) continue;  // full cycle, handled above
          if (s == EdgeState::Free && !info.apply(v, p, Sigma::Minus, i))
            return PropResult::Exit;
        }
      }
    }
    return PropResult::Ok;
  }

  // sigma = -: e = bc acts as a chord of a C4 (b, z, c, y).
  const int b = aug.u, c = aug.v;
  for (int z = 0; z < n; ++z) {
    if (z == b || z == c) continue;
    for (int y = z + 1; y < n; ++y) {
      if (y == b || y == c) continue;
      EdgeState s1 = info.state(b, z, i);
      EdgeState s2 = info.state(z, c, i);
      EdgeState s3 = info.state(c, y, i);
      EdgeState s4 = info.state(y, b, i);
      int required = (s1 == EdgeState::Required) + (s2 == EdgeState::Required) +
                     (s3 == EdgeState::Required) + (s4 == EdgeState::Required);
      if (info.is_excluded(z, y, i)) {
        if (required == 4) return PropResult::Exit;
        if (required == 3) {
          // The one non-required cycle edge is forced out, if still free.
          auto fix_if_free = [&](EdgeState s, int x1, int x2) {
            if (s != EdgeState::Free) return true;
            return info.apply(x1, x2, Sigma::Minus, i);
          };
          if (s1 != EdgeState::Required && !fix_if_free(s1, b, z)) return PropResult::Exit;
          if (s2 != EdgeState::Required && !fix_if_free(s2, z, c)) return PropResult::Exit;
          if (s3 != EdgeState::Required && !fix_if_free(s3, c, y)) return PropResult::Exit;
          if (s4 != EdgeState::Required && !fix_if_free(s4, y, b)) return PropResult::Exit;
        }
      } else if (required == 4 && info.is_free(z, y, i)) {
        // Complete cycle, e one chord: the other chord must be an overlap.
        if (!info.apply(z, y, Sigma::Plus, i)) return PropResult::Exit;
      }
    }
  }
  return PropResult::Ok;
}

PropResult avoid_cliques(const BoxSubset& boxes, SearchInfo& info, const Augmentation& aug) {
  if (aug.sigma != Sigma::Minus) return PropResult::Ok;
  const int i = aug.direction;
  const int b = aug.u, c = aug.v;
  const int n = info.n();
  const Extent capacity = boxes.container(i);

  ExcludedCliqueFinder cliques{info, boxes, i};

  // The heaviest excluded clique through bc must fit direction i.
  std::vector<int> s0;
  for (int z = 0; z < n; ++z)
    if (z != b && z != c && info.is_excluded(b, z, i) && info.is_excluded(c, z, i))
      s0.push_back(z);
  auto s0_clique = cliques.find(s0);
  if (s0_clique.weight + boxes.width(b, i) + boxes.width(c, i) > capacity)
    return PropResult::Exit;

  IndRows ind{info, boxes, {}};

  // Tries to force e' = (p, q) into direction i: the witness set B must
  // contain b, c, p, q, consist of pairwise excluded-or-indistinguishable
  // boxes (indistinguishable from e'), and be too wide for the container.
  auto try_force = [&](int p, int q) -> std::optional<PropResult> {
    if (!info.is_free(p, q, i)) return std::nullopt;

    std::set<int> members{b, c, p, q};
    std::vector<int> common;
    for (int z : s0)
      if (z != p && z != q && info.is_excluded(p, z, i) && info.is_excluded(q, z, i))
        common.push_back(z);
    for (int z : cliques.find(common).vertices) members.insert(z);

    for (int v : {p, q}) {
      std::vector<int> twins;
      for (int z = 0; z < n; ++z)
        if (z != v && ind.ind(v, z)) twins.push_back(z);
      if (twins.empty()) continue;
      bool clique = true;
      twins.push_back(v);
      for (size_t a = 0; a < twins.size() && clique; ++a)
        for (size_t bb = a + 1; bb < twins.size() && clique; ++bb)
          if (!info.is_excluded(twins[a], twins[bb], i)) clique = false;
      if (clique)
        for (int z : twins) members.insert(z);
    }

    std::vector<int> set(members.begin(), members.end());
    std::int64_t weight = 0;
    for (size_t a = 0; a < set.size(); ++a) {
      weight += boxes.width(set[a], i);
      for (size_t bb = a + 1; bb < set.size(); ++bb) {
        int x = set[a], y = set[bb];
        if (info.is_excluded(x, y, i)) continue;
        bool matches = (ind.ind(x, p) && ind.ind(y, q)) || (ind.ind(x, q) && ind.ind(y, p));
        if (!matches) return std::nullopt;
      }
    }
    if (weight <= capacity) return std::nullopt;
    if (!info.apply(p, q, Sigma::Plus, i)) return PropResult::Exit;
    return std::nullopt;
  };

  // Case 1: b and c indistinguishable; any free partner of b is a candidate.
  if (ind.ind(b, c)) {
    for (int bp = 0; bp < n; ++bp) {
      if (bp == b || bp == c || !info.is_free(b, bp, i)) continue;
      if (auto r = try_force(b, bp)) return *r;
    }
  }
  // Cases 2 and 3: one endpoint shares an excluded edge, the other is free.
  for (int bp = 0; bp < n; ++bp) {
    if (bp == b || bp == c) continue;
    if (info.is_free(b, bp, i) && info.is_excluded(c, bp, i))
      if (auto r = try_force(b, bp)) return *r;
    if (info.is_excluded(b, bp, i) && info.is_free(c, bp, i))
      if (auto r = try_force(c, bp)) return *r;
  }
  // Case 4: both candidate endpoints are excluded against b and c.
  for (size_t a = 0; a < s0.size(); ++a)
    for (size_t bb = a + 1; bb < s0.size(); ++bb)
      if (info.is_free(s0[a], s0[bb], i))
        if (auto r = try_force(s0[a], s0[bb])) return *r;

  return PropResult::Ok;
}

PropResult update_searchinfo(const BoxSubset& boxes, const std::optional<Augmentation>& aug,
                             SearchInfo& info, const OppOptions& options) {
  if (!aug) {
    auto root = init_root(boxes, options.use_type_cliques);
    if (!root) return PropResult::Exit;
    info = std::move(*root);
  } else if (aug->sigma == Sigma::Plus) {
    if (!info.apply(*aug)) return PropResult::Exit;
  } else {
    // Excluding e also excludes every edge indistinguishable from it; only
    // isomorphic packing classes are lost, and those live in the + sibling.
    std::vector<std::pair<int, int>> targets;
    if (options.use_twin_exclusion) {
      std::vector<char> like_u(info.n()), like_v(info.n());
      for (int z = 0; z < info.n(); ++z) {
        like_u[z] = indistinguishable_boxes(info, boxes, aug->u, z) ? 1 : 0;
        like_v[z] = indistinguishable_boxes(info, boxes, aug->v, z) ? 1 : 0;
      }
      std::set<std::pair<int, int>> seen;
      for (int p = 0; p < info.n(); ++p) {
        if (!like_u[p]) continue;
        for (int q = 0; q < info.n(); ++q) {
          if (q == p || !like_v[q]) continue;
          seen.insert({std::min(p, q), std::max(p, q)});
        }
      }
      targets.assign(seen.begin(), seen.end());
    } else {
      targets.push_back({aug->u, aug->v});
    }
    for (auto [p, q] : targets)
      if (!info.apply(p, q, Sigma::Minus, aug->direction)) return PropResult::Exit;
  }

  while (!info.queue_empty()) {
    Augmentation t = info.pop_queue();
    if (check_p3(info, t) == PropResult::Exit) return PropResult::Exit;
    if (options.use_avoid_c4 && avoid_c4(info, t) == PropResult::Exit) return PropResult::Exit;
    if (options.use_avoid_cliques && avoid_cliques(boxes, info, t) == PropResult::Exit)
      return PropResult::Exit;
  }
  return PropResult::Ok;
}

OppVerdict solve_opp(const Instance& instance, const std::vector<int>& subset,
                     const SearchLimits& limits, const OppOptions& options) {
  BoxSubset boxes = BoxSubset::of(instance, subset);
  auto deadline = limits.effective_deadline();

  struct Node {
    SearchInfo info;
    std::optional<Augmentation> triple;
    int depth = 0;
  };
  std::vector<Node> pool;
  pool.push_back(Node{});

  OppVerdict verdict;
  while (!pool.empty()) {
    if (limits.node_cap && verdict.nodes >= *limits.node_cap) {
      verdict.status = OppStatus::Timeout;
      return verdict;
    }
    if (deadline && now() >= *deadline) {
      verdict.status = OppStatus::Timeout;
      return verdict;
    }
    Node node = std::move(pool.back());
    pool.pop_back();
    ++verdict.nodes;

    while (true) {
      if (update_searchinfo(boxes, node.triple, node.info, options) == PropResult::Exit) break;
      if (options.shallow_prune && node.depth <= options.shallow_prune_max_depth &&
          options.shallow_prune(boxes, node.info, node.depth))
        break;
      ClassTestResult result = packingclass_test(boxes, node.info);
      if (result.kind == ClassTestResult::Kind::Success) {
        verdict.status = OppStatus::Feasible;
        verdict.packing_class = required_sets_of(node.info);
        verdict.packing = build_packing(boxes, *verdict.packing_class);
        return verdict;
      }
      if (result.kind == ClassTestResult::Kind::Exit) break;
      if (result.kind == ClassTestResult::Kind::Fix) {
        node.triple = result.triple;
        continue;
      }
      // Branch: the overlap child is explored first.
      Augmentation plus = result.triple;
      Augmentation minus = result.triple;
      minus.sigma = Sigma::Minus;
      pool.push_back(Node{node.info, minus, node.depth + 1});
      pool.push_back(Node{std::move(node.info), plus, node.depth + 1});
      break;
    }
  }
  verdict.status = OppStatus::Infeasible;
  return verdict;
}

}  // namespace opack
