#include "opack/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace opack {

Instance::Instance(int dimensions, std::vector<Extent> container,
                   std::vector<BoxType> types, ProblemKind kind)
    : d_(dimensions), kind_(kind), container_(std::move(container)),
      types_(std::move(types)) {
  if (d_ < 2) throw std::invalid_argument("dimension must be at least 2");
  if ((int)container_.size() != d_)
    throw std::invalid_argument("container extent count does not match dimension");
  for (Extent w : container_)
    if (w < 1) throw std::invalid_argument("container extent must be positive");
  if (types_.empty()) throw std::invalid_argument("instance needs at least one box type");

  int id = 0;
  for (int t = 0; t < (int)types_.size(); ++t) {
    const BoxType& bt = types_[t];
    if ((int)bt.sizes.size() != d_)
      throw std::invalid_argument("box size count does not match dimension");
    if (bt.count < 1) throw std::invalid_argument("box type count must be positive");
    if (bt.value < 0) throw std::invalid_argument("box value must be nonnegative");
    __int128 volume = 1;
    for (int i = 0; i < d_; ++i) {
      if (bt.sizes[i] < 1) throw std::invalid_argument("box size must be positive");
      if (bt.sizes[i] > container_[i])
        throw std::invalid_argument("box does not fit the container");
      volume *= bt.sizes[i];
    }
    if (volume > INT64_MAX) throw std::invalid_argument("box volume exceeds 64 bits");
    type_first_.push_back(id);
    for (int j = 0; j < bt.count; ++j) {
      Box b;
      b.id = id++;
      b.type_index = t;
      b.sizes = bt.sizes;
      b.value = bt.value;
      boxes_.push_back(std::move(b));
    }
  }
}

std::int64_t Instance::total_value() const {
  std::int64_t v = 0;
  for (const BoxType& t : types_) v += t.value * t.count;
  return v;
}

Instance Instance::with_kind(ProblemKind kind) const {
  return Instance(d_, container_, types_, kind);
}

Instance Instance::with_container(std::vector<Extent> container) const {
  return Instance(d_, std::move(container), types_, kind_);
}

std::optional<PackingViolation> validate_packing(const Instance& instance,
                                                 const std::vector<int>& subset,
                                                 const Packing& packing) {
  for (int id : subset)
    if (id < 0 || id >= instance.num_boxes())
      return PackingViolation{PackingViolation::Kind::UnknownBox, id, -1, -1,
                              "unknown box id " + std::to_string(id)};

  std::set<int> want(subset.begin(), subset.end());
  if (want.size() != packing.size())
    return PackingViolation{PackingViolation::Kind::SubsetMismatch, -1, -1, -1,
                            "packing does not cover exactly the subset"};
  for (const auto& [id, pos] : packing) {
    if (!want.count(id))
      return PackingViolation{PackingViolation::Kind::SubsetMismatch, id, -1, -1,
                              "box " + std::to_string(id) + " packed but not in subset"};
    const Box& b = instance.box(id);
    if ((int)pos.size() != instance.dim())
      return PackingViolation{PackingViolation::Kind::SubsetMismatch, id, -1, -1,
                              "coordinate count does not match dimension"};
    for (int i = 0; i < instance.dim(); ++i) {
      if (pos[i] < 0 || pos[i] + b.sizes[i] > instance.container(i))
        return PackingViolation{PackingViolation::Kind::OutsideContainer, id, -1, i,
                                "box " + std::to_string(id) +
                                    " leaves the container in direction " +
                                    std::to_string(i + 1)};
    }
  }
  for (auto a = packing.begin(); a != packing.end(); ++a) {
    for (auto b = std::next(a); b != packing.end(); ++b) {
      const Box& ba = instance.box(a->first);
      const Box& bb = instance.box(b->first);
      bool disjoint = false;
      for (int i = 0; i < instance.dim() && !disjoint; ++i) {
        if (a->second[i] + ba.sizes[i] <= b->second[i] ||
            b->second[i] + bb.sizes[i] <= a->second[i])
          disjoint = true;
      }
      if (!disjoint)
        return PackingViolation{PackingViolation::Kind::Overlap, a->first, b->first, -1,
                                "boxes " + std::to_string(a->first) + " and " +
                                    std::to_string(b->first) + " overlap in every direction"};
    }
  }
  return std::nullopt;
}

}  // namespace opack
