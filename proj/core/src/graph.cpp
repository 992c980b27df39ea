#include "opack/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace opack {

bool Orientation::orients_every_edge_once(const Graph& g) const {
  if (g.n != n) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int count = (int)dir.test(u, v) + (int)dir.test(v, u);
      if (count != (g.has_edge(u, v) ? 1 : 0)) return false;
    }
  return true;
}

bool Orientation::is_transitive(const Graph& g) const {
  // u->v requires succ(v) subset of succ(u).
  int words = dir.words();
  for (int u = 0; u < n; ++u) {
    const std::uint64_t* su = dir.row(u);
    bool ok = true;
    dir.for_each_in_row(u, [&](int v) {
      if (!ok) return;
      const std::uint64_t* sv = dir.row(v);
      for (int w = 0; w < words; ++w)
        if (sv[w] & ~su[w]) { ok = false; return; }
    });
    if (!ok) return false;
  }
  (void)g;
  return true;
}

bool OddCycleCertificate::valid_for(const Graph& g) const {
  size_t m = walk.size();
  if (m < 5 || m % 2 == 0) return false;
  for (size_t j = 0; j < m; ++j) {
    int a = walk[j];
    int b = walk[(j + 1) % m];
    int c = walk[(j + 2) % m];
    if (a < 0 || a >= g.n || a == b) return false;
    if (!g.has_edge(a, b)) return false;
    if (a != c && g.has_edge(a, c)) return false;
  }
  return true;
}

namespace {

// Directed edge id for u -> v.
inline int eid(int n, int u, int v) { return u * n + v; }

// Walks the forcing relation from u -> v: edges sharing an endpoint whose
// free ends are non-adjacent force each other's direction.
template <typename Visit>
void forcing_neighbors(const BitMatrix& adj, int words, int u, int v, Visit&& visit) {
  // Same tail: u -> v' for v' adjacent to u with v v' not an edge.
  {
    const std::uint64_t* au = adj.row(u);
    const std::uint64_t* av = adj.row(v);
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = au[w] & ~av[w];
      while (word) {
        int bit = __builtin_ctzll(word);
        word &= word - 1;
        int vp = w * 64 + bit;
        if (vp != v) visit(u, vp);
      }
    }
  }
  // Same head: u' -> v for u' adjacent to v with u u' not an edge.
  {
    const std::uint64_t* av = adj.row(v);
    const std::uint64_t* au = adj.row(u);
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = av[w] & ~au[w];
      while (word) {
        int bit = __builtin_ctzll(word);
        word &= word - 1;
        int up = w * 64 + bit;
        if (up != u) visit(up, v);
      }
    }
  }
}

// Searches the shortest closed odd walk w_0 = x, w_1 = y, ..., w_m = x whose
// consecutive pairs are edges and whose distance-2 pairs are equal or
// non-adjacent. Returns an empty walk when none passes through (x, y).
std::vector<int> shortest_obstruction_walk(const Graph& g, int x, int y) {
  int n = g.n;
  // State: previous vertex, current vertex, parity of steps taken so far.
  auto sid = [n](int prev, int cur, int parity) { return (prev * n + cur) * 2 + parity; };
  std::vector<int> parent(2 * n * n, -1);
  std::vector<char> seen(2 * n * n, 0);
  std::deque<int> queue;

  int start = sid(x, y, 1);
  seen[start] = 1;
  parent[start] = -2;
  queue.push_back(start);

  int accept_from = -1;
  while (!queue.empty() && accept_from < 0) {
    int s = queue.front();
    queue.pop_front();
    int parity = s & 1;
    int cur = (s >> 1) % n;
    int prev = (s >> 1) / n;
    g.adj.for_each_in_row(cur, [&](int next) {
      if (accept_from >= 0) return;
      if (next != prev && g.has_edge(prev, next)) return;  // would create a 2-chord
      // Closing step: even parity here makes the closed length odd. Both wrap
      // pairs (w_{m-2}, w_0) and (w_{m-1}, w_1) must also be 2-chord free.
      if (next == x && parity == 0 && (cur == y || !g.has_edge(cur, y))) {
        accept_from = s;
        return;
      }
      int s2 = sid(cur, next, 1 - parity);
      if (seen[s2]) return;
      seen[s2] = 1;
      parent[s2] = s;
      queue.push_back(s2);
    });
  }
  if (accept_from < 0) return {};

  std::vector<int> walk;
  for (int s = accept_from; s != -2; s = parent[s])
    walk.push_back((s >> 1) % n);
  walk.push_back(x);  // w_0
  std::reverse(walk.begin(), walk.end());
  return walk;
}

OddCycleCertificate extract_certificate(const Graph& g, int hint_u, int hint_v) {
  std::vector<int> walk = shortest_obstruction_walk(g, hint_u, hint_v);
  if (walk.empty()) walk = shortest_obstruction_walk(g, hint_v, hint_u);
  if (walk.empty()) {
    for (auto [u, v] : g.edges()) {
      walk = shortest_obstruction_walk(g, u, v);
      if (!walk.empty()) break;
      walk = shortest_obstruction_walk(g, v, u);
      if (!walk.empty()) break;
    }
  }
  OddCycleCertificate cert{std::move(walk)};
  if (cert.walk.empty() || !cert.valid_for(g))
    throw std::logic_error("forcing conflict without extractable odd-walk certificate");
  return cert;
}

}  // namespace

ComparabilityResult recognize_comparability(const Graph& g) {
  int n = g.n;
  int words = g.adj.words();

  // Phase 1: scan the implication classes of g itself; a class containing an
  // edge in both directions certifies non-comparability.
  {
    std::vector<char> visited((size_t)n * n, 0);
    std::vector<char> in_class((size_t)n * n, 0);
    std::vector<int> stack;
    std::vector<int> members;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v) || visited[eid(n, u, v)]) continue;
        members.clear();
        stack.push_back(eid(n, u, v));
        in_class[eid(n, u, v)] = 1;
        members.push_back(eid(n, u, v));
        std::optional<std::pair<int, int>> conflict;
        while (!stack.empty() && !conflict) {
          int id = stack.back();
          stack.pop_back();
          int a = id / n, b = id % n;
          if (in_class[eid(n, b, a)]) {
            conflict = std::make_pair(a, b);
            break;
          }
          forcing_neighbors(g.adj, words, a, b, [&](int a2, int b2) {
            int id2 = eid(n, a2, b2);
            if (!in_class[id2]) {
              in_class[id2] = 1;
              members.push_back(id2);
              stack.push_back(id2);
            }
          });
        }
        if (conflict) return extract_certificate(g, conflict->first, conflict->second);
        for (int id : members) {
          in_class[id] = 0;
          visited[id] = 1;
          visited[eid(n, id % n, id / n)] = 1;  // the mirror class conflicts iff this one does
        }
        stack.clear();
      }
    }
  }

  // Phase 2: orient class by class; each round recomputes forcing against
  // the still-unoriented edge set, where previously oriented pairs count as
  // non-adjacent.
  Orientation orientation(n);
  BitMatrix remaining = g.adj;
  std::vector<std::pair<int, int>> round_edges;
  std::vector<char> in_class((size_t)n * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      while (remaining.test(u, v)) {
        round_edges.clear();
        std::vector<int> stack{eid(n, u, v)};
        in_class[eid(n, u, v)] = 1;
        while (!stack.empty()) {
          int id = stack.back();
          stack.pop_back();
          int a = id / n, b = id % n;
          if (in_class[eid(n, b, a)])
            throw std::logic_error("forcing conflict after clean class scan");
          round_edges.emplace_back(a, b);
          forcing_neighbors(remaining, words, a, b, [&](int a2, int b2) {
            int id2 = eid(n, a2, b2);
            if (!in_class[id2]) {
              in_class[id2] = 1;
              stack.push_back(id2);
            }
          });
        }
        for (auto [a, b] : round_edges) {
          orientation.orient(a, b);
          remaining.reset(a, b);
          remaining.reset(b, a);
          in_class[eid(n, a, b)] = 0;
        }
      }
    }
  }

  if (!orientation.orients_every_edge_once(g) || !orientation.is_transitive(g))
    throw std::logic_error("orientation construction failed verification");
  return orientation;
}

WeightedClique max_weight_clique_comparability(const Graph& g, const Orientation& orientation,
                                               const std::vector<std::int64_t>& weights) {
  int n = g.n;
  if (n == 0) return {};
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    orientation.dir.for_each_in_row(u, [&](int v) { ++indeg[v]; });

  // Heaviest chain in the transitive DAG; ready vertices processed in id
  // order so witnesses are deterministic.
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);

  std::vector<std::int64_t> best(n, 0);
  std::vector<int> parent(n, -1);
  int processed = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    ++processed;
    best[v] += weights[v];
    orientation.dir.for_each_in_row(v, [&](int w) {
      if (best[v] > best[w] || (best[v] == best[w] && (parent[w] < 0 || v < parent[w]))) {
        best[w] = best[v];
        parent[w] = v;
      }
      if (--indeg[w] == 0) ready.push(w);
    });
  }
  if (processed != n) throw std::invalid_argument("orientation is cyclic");

  int end = 0;
  for (int v = 1; v < n; ++v)
    if (best[v] > best[end]) end = v;

  WeightedClique out;
  out.weight = best[end];
  for (int v = end; v >= 0; v = parent[v]) out.vertices.push_back(v);
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

std::optional<InducedC4> find_induced_c4(const Graph& g) {
  int n = g.n;
  int words = g.adj.words();
  for (int a = 0; a < n; ++a) {
    const std::uint64_t* ra = g.adj.row(a);
    for (int b = 0; b < n; ++b) {
      if (b == a || !g.has_edge(a, b)) continue;
      const std::uint64_t* rb = g.adj.row(b);
      for (int w1 = 0; w1 < words; ++w1) {
        std::uint64_t cw = rb[w1] & ~ra[w1];
        while (cw) {
          int c = w1 * 64 + __builtin_ctzll(cw);
          cw &= cw - 1;
          if (c == a) continue;
          const std::uint64_t* rc = g.adj.row(c);
          for (int w2 = 0; w2 < words; ++w2) {
            std::uint64_t dw = ra[w2] & rc[w2] & ~rb[w2];
            if (w2 == b >> 6) dw &= ~(1ull << (b & 63));
            if (dw) {
              int d = w2 * 64 + __builtin_ctzll(dw);
              return InducedC4{{a, b, c, d}, {std::make_pair(a, c), std::make_pair(b, d)}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<int> greedy_clique_extend(const Graph& g, const std::vector<int>& seed,
                                      const std::vector<std::int64_t>& weights) {
  for (size_t i = 0; i < seed.size(); ++i)
    for (size_t j = i + 1; j < seed.size(); ++j)
      if (!g.has_edge(seed[i], seed[j]))
        throw std::invalid_argument("greedy_clique_extend seed is not a clique");

  std::vector<char> in_seed(g.n, 0);
  for (int v : seed) in_seed[v] = 1;
  std::vector<int> order;
  for (int v = 0; v < g.n; ++v)
    if (!in_seed[v]) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });

  std::vector<int> clique = seed;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) { ok = false; break; }
    if (!ok) break;
    clique.push_back(v);
  }
  return clique;
}

}  // namespace opack
