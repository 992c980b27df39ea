#pragma once

#include <optional>
#include <vector>

#include "opack/graph.hpp"
#include "opack/instance.hpp"
#include "opack/search_info.hpp"

namespace opack {

// d edge sets over the boxes under test. A packing class satisfies
//   P1: every component graph is an interval graph,
//   P2: every stable set of component i fits the container in direction i,
//   P3: no pair of boxes overlaps in every direction.
struct PackingClass {
  PackingClass() = default;
  PackingClass(int n, int d) : n(n), d(d), edges(d, BitMatrix(n)) {}

  int n = 0;
  int d = 0;
  std::vector<BitMatrix> edges;

  bool has_edge(int u, int v, int direction) const { return edges[direction].test(u, v); }
  void add_edge(int u, int v, int direction) {
    edges[direction].set(u, v);
    edges[direction].set(v, u);
  }
};

// Extracts the required sets of a search information as a candidate class.
PackingClass required_sets_of(const SearchInfo& info);

struct ClassTestResult {
  enum class Kind { Success, Exit, Fix, Branch };
  Kind kind;
  Augmentation triple;  // set for Fix and Branch
};

// One pass of the packing-class test: per direction, comparability of the
// complement of the required set, then the heaviest clique against the
// container extent, then an induced C4 among required edges. The offending
// edge set minus the excluded edges drives Exit / Fix / Branch; no offense
// anywhere means the required sets already form a packing class.
ClassTestResult packingclass_test(const BoxSubset& boxes, const SearchInfo& info);

// Verifies P1-P3 (throws std::invalid_argument otherwise), then reads one
// packing off the class: per direction a transitive orientation of the
// complement orders the boxes, and each coordinate is the heaviest chain of
// predecessors. Keys of the result are original instance ids.
Packing build_packing(const BoxSubset& boxes, const PackingClass& pc);

// The P1/P2/P3 verification used by build_packing, callable on its own.
bool is_packing_class(const BoxSubset& boxes, const PackingClass& pc);

}  // namespace opack
