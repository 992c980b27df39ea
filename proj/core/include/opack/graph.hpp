#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "opack/bitmatrix.hpp"

namespace opack {

// Undirected simple graph over vertices 0..n-1.
struct Graph {
  Graph() = default;
  explicit Graph(int n) : n(n), adj(n) {}

  int n = 0;
  BitMatrix adj;
  std::vector<std::int64_t> weights;  // optional; empty or size n

  void add_edge(int u, int v) {
    assert(u != v);
    adj.set(u, v);
    adj.set(v, u);
  }
  bool has_edge(int u, int v) const { return adj.test(u, v); }

  Graph complement() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!adj.test(u, v)) g.add_edge(u, v);
    g.weights = weights;
    return g;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj.test(u, v)) out.emplace_back(u, v);
    return out;
  }
};

// An orientation assigns each edge one direction; `has(u,v)` means u -> v.
struct Orientation {
  Orientation() = default;
  explicit Orientation(int n) : n(n), dir(n) {}

  int n = 0;
  BitMatrix dir;

  bool has(int u, int v) const { return dir.test(u, v); }
  void orient(int u, int v) { dir.set(u, v); }

  bool orients_every_edge_once(const Graph& g) const;
  // F transitive: u->v and v->w imply u->w.
  bool is_transitive(const Graph& g) const;
};

// Witness that a graph is not a comparability graph: a closed walk of odd
// length >= 5 whose edges are all in the graph and whose distance-2 pairs
// are never edges (vertices may repeat; a repeated vertex at distance 2 is
// fine since there are no self-loops).
struct OddCycleCertificate {
  std::vector<int> walk;

  bool valid_for(const Graph& g) const;
};

using ComparabilityResult = std::variant<Orientation, OddCycleCertificate>;

// Transitive-orientation recognition by edge forcing: either a verified
// transitive orientation or an odd-walk certificate, never both.
ComparabilityResult recognize_comparability(const Graph& g);

struct WeightedClique {
  std::vector<int> vertices;
  std::int64_t weight = 0;
};

// Maximum-weight clique of a comparability graph, computed as the heaviest
// chain of the given transitive orientation. Linear in the edge count.
WeightedClique max_weight_clique_comparability(const Graph& g, const Orientation& orientation,
                                               const std::vector<std::int64_t>& weights);

struct InducedC4 {
  std::array<int, 4> cycle;                    // in cycle order
  std::array<std::pair<int, int>, 2> chords;   // the two absent diagonals
};

// First induced 4-cycle in deterministic scan order, if any.
std::optional<InducedC4> find_induced_c4(const Graph& g);

// Grows `seed` (a clique) by scanning the remaining vertices in order of
// decreasing weight (ties by smallest id), adding while each scanned vertex
// keeps the set a clique and stopping at the first one that does not.
std::vector<int> greedy_clique_extend(const Graph& g, const std::vector<int>& seed,
                                      const std::vector<std::int64_t>& weights);

}  // namespace opack
