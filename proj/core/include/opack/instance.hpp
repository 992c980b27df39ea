#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace opack {

using Extent = std::int64_t;

enum class ProblemKind { Knapsack, Decision, Strip };

// One class of identical boxes: sizes per direction, a value and a
// multiplicity.
struct BoxType {
  std::vector<Extent> sizes;
  std::int64_t value = 0;
  int count = 1;
};

// A single box. Boxes of one type occupy a contiguous id range, so box
// b_{t,j} has id  first_id(t) + j.
struct Box {
  int id = 0;
  int type_index = 0;
  std::vector<Extent> sizes;
  std::int64_t value = 0;
};

class Instance {
 public:
  // Throws std::invalid_argument if any invariant fails (non-positive
  // extent, box not fitting the container, empty type list, ...).
  Instance(int dimensions, std::vector<Extent> container,
           std::vector<BoxType> types, ProblemKind kind = ProblemKind::Knapsack);

  int dim() const { return d_; }
  ProblemKind kind() const { return kind_; }
  const std::vector<Extent>& container() const { return container_; }
  Extent container(int direction) const { return container_[direction]; }
  const std::vector<BoxType>& types() const { return types_; }
  int num_types() const { return (int)types_.size(); }
  const std::vector<Box>& boxes() const { return boxes_; }
  int num_boxes() const { return (int)boxes_.size(); }
  const Box& box(int id) const { return boxes_[id]; }
  // Id of box b_{t,0}; the type's boxes are [first_id, first_id + count).
  int first_id(int type_index) const { return type_first_[type_index]; }

  std::int64_t total_value() const;
  Instance with_kind(ProblemKind kind) const;
  Instance with_container(std::vector<Extent> container) const;

 private:
  int d_;
  ProblemKind kind_;
  std::vector<Extent> container_;
  std::vector<BoxType> types_;
  std::vector<Box> boxes_;
  std::vector<int> type_first_;
};

// Lower-corner coordinates keyed by box id.
using Packing = std::map<int, std::vector<Extent>>;

struct PackingViolation {
  enum class Kind { UnknownBox, SubsetMismatch, OutsideContainer, Overlap };
  Kind kind;
  int box_a = -1;
  int box_b = -1;      // only for Overlap
  int direction = -1;  // offending direction for OutsideContainer
  std::string message;
};

// Checks that `packing` places exactly `subset` inside the container with
// pairwise disjoint boxes (some direction with disjoint projections).
std::optional<PackingViolation> validate_packing(const Instance& instance,
                                                 const std::vector<int>& subset,
                                                 const Packing& packing);

}  // namespace opack
