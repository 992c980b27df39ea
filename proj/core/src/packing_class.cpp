#include "opack/packing_class.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace opack {

namespace {

Graph complement_of_required(const SearchInfo& info, int direction) {
  int n = info.n();
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!info.is_required(u, v, direction)) g.add_edge(u, v);
  return g;
}

std::vector<std::int64_t> direction_weights(const BoxSubset& boxes, int direction) {
  std::vector<std::int64_t> w(boxes.size());
  for (int v = 0; v < boxes.size(); ++v) w[v] = boxes.width(v, direction);
  return w;
}

// Deterministic branching choice: smallest by endpoint types, then ids.
Augmentation choose_edge(const BoxSubset& boxes, const std::vector<std::pair<int, int>>& candidates,
                         int direction) {
  auto key = [&](std::pair<int, int> e) {
    int tu = boxes.type_of[e.first], tv = boxes.type_of[e.second];
    return std::tuple(std::min(tu, tv), std::max(tu, tv), e.first, e.second);
  };
  std::pair<int, int> best = candidates.front();
  for (const auto& e : candidates)
    if (key(e) < key(best)) best = e;
  return Augmentation{best.first, best.second, Sigma::Plus, direction};
}

}  // namespace

PackingClass required_sets_of(const SearchInfo& info) {
  PackingClass pc(info.n(), info.dim());
  for (int i = 0; i < info.dim(); ++i)
    for (int u = 0; u < info.n(); ++u)
      for (int v = u + 1; v < info.n(); ++v)
        if (info.is_required(u, v, i)) pc.add_edge(u, v, i);
  return pc;
}

ClassTestResult packingclass_test(const BoxSubset& boxes, const SearchInfo& info) {
  int n = boxes.size();
  int d = boxes.dim();
  for (int i = 0; i < d; ++i) {
    std::vector<std::pair<int, int>> offense;  // edges, at least one must join E_{+,i}

    Graph cograph = complement_of_required(info, i);
    auto recognition = recognize_comparability(cograph);
    if (auto* cert = std::get_if<OddCycleCertificate>(&recognition)) {
      std::set<std::pair<int, int>> edges;
      size_t m = cert->walk.size();
      for (size_t j = 0; j < m; ++j) {
        int a = cert->walk[j], b = cert->walk[(j + 1) % m];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
      offense.assign(edges.begin(), edges.end());
    } else {
      auto weights = direction_weights(boxes, i);
      WeightedClique clique =
          max_weight_clique_comparability(cograph, std::get<Orientation>(recognition), weights);
      if (clique.weight > boxes.container(i)) {
        for (size_t a = 0; a < clique.vertices.size(); ++a)
          for (size_t b = a + 1; b < clique.vertices.size(); ++b)
            offense.emplace_back(std::min(clique.vertices[a], clique.vertices[b]),
                                 std::max(clique.vertices[a], clique.vertices[b]));
      } else {
        Graph required(n);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (info.is_required(u, v, i)) required.add_edge(u, v);
        if (auto c4 = find_induced_c4(required)) {
          offense.emplace_back(std::min(c4->chords[0].first, c4->chords[0].second),
                               std::max(c4->chords[0].first, c4->chords[0].second));
          offense.emplace_back(std::min(c4->chords[1].first, c4->chords[1].second),
                               std::max(c4->chords[1].first, c4->chords[1].second));
        }
      }
    }

    if (offense.empty()) continue;
    std::vector<std::pair<int, int>> candidates;
    for (const auto& [u, v] : offense)
      if (!info.is_excluded(u, v, i)) candidates.emplace_back(u, v);
    if (candidates.empty()) return {ClassTestResult::Kind::Exit, {}};
    Augmentation aug = choose_edge(boxes, candidates, i);
    if (candidates.size() == 1) return {ClassTestResult::Kind::Fix, aug};
    return {ClassTestResult::Kind::Branch, aug};
  }
  return {ClassTestResult::Kind::Success, {}};
}

bool is_packing_class(const BoxSubset& boxes, const PackingClass& pc) {
  int n = pc.n;
  if (n != boxes.size() || pc.d != boxes.dim()) return false;
  // P3
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool everywhere = true;
      for (int i = 0; i < pc.d && everywhere; ++i)
        if (!pc.has_edge(u, v, i)) everywhere = false;
      if (everywhere) return false;
    }
  for (int i = 0; i < pc.d; ++i) {
    Graph component(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pc.has_edge(u, v, i)) component.add_edge(u, v);
    // P1: interval = C4-free and cocomparability.
    if (find_induced_c4(component)) return false;
    Graph cograph = component.complement();
    auto recognition = recognize_comparability(cograph);
    if (std::holds_alternative<OddCycleCertificate>(recognition)) return false;
    // P2: heaviest stable set of the component = heaviest clique of the
    // complement.
    auto weights = direction_weights(boxes, i);
    WeightedClique clique =
        max_weight_clique_comparability(cograph, std::get<Orientation>(recognition), weights);
    if (clique.weight > boxes.container(i)) return false;
  }
  return true;
}

Packing build_packing(const BoxSubset& boxes, const PackingClass& pc) {
  if (!is_packing_class(boxes, pc))
    throw std::invalid_argument("build_packing input violates P1/P2/P3");

  int n = pc.n;
  Packing packing;
  std::vector<std::vector<Extent>> coords(n, std::vector<Extent>(pc.d, 0));
  for (int i = 0; i < pc.d; ++i) {
    Graph component(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pc.has_edge(u, v, i)) component.add_edge(u, v);
    Graph cograph = component.complement();
    Orientation orientation = std::get<Orientation>(recognize_comparability(cograph));

    // Coordinate = heaviest chain of strict predecessors, in topological
    // order of the transitive orientation.
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
      orientation.dir.for_each_in_row(u, [&](int v) { ++indeg[v]; });
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    int processed = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++processed;
      orientation.dir.for_each_in_row(v, [&](int w) {
        coords[w][i] = std::max(coords[w][i], coords[v][i] + boxes.width(v, i));
        if (--indeg[w] == 0) stack.push_back(w);
      });
    }
    if (processed != n) throw std::logic_error("transitive orientation has a cycle");
  }
  for (int v = 0; v < n; ++v) packing[boxes.ids[v]] = coords[v];

  if (auto violation = validate_packing(*boxes.instance, boxes.ids, packing))
    throw std::logic_error("constructed packing failed validation: " + violation->message);
  return packing;
}

}  // namespace opack
