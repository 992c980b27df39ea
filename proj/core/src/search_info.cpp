#include "opack/search_info.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opack {

BoxSubset BoxSubset::of(const Instance& instance, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  BoxSubset s;
  s.instance = &instance;
  s.ids = std::move(ids);
  for (int id : s.ids) {
    const Box& b = instance.box(id);
    s.sizes.push_back(b.sizes);
    s.type_of.push_back(b.type_index);
  }
  return s;
}

BoxSubset BoxSubset::whole(const Instance& instance) {
  std::vector<int> ids(instance.num_boxes());
  std::iota(ids.begin(), ids.end(), 0);
  return of(instance, std::move(ids));
}

SearchInfo::SearchInfo(int num_boxes, int dimensions) : n_(num_boxes), d_(dimensions) {
  required_.assign(d_, BitMatrix(n_));
  excluded_.assign(d_, BitMatrix(n_));
}

Augmentation SearchInfo::pop_queue() {
  Augmentation a = queue_[queue_head_++];
  if (queue_head_ >= queue_.size()) clear_queue();
  return a;
}

void SearchInfo::set_state_raw(int u, int v, int direction, EdgeState state) {
  required_[direction].reset(u, v);
  required_[direction].reset(v, u);
  excluded_[direction].reset(u, v);
  excluded_[direction].reset(v, u);
  if (state == EdgeState::Required) {
    required_[direction].set(u, v);
    required_[direction].set(v, u);
  } else if (state == EdgeState::Excluded) {
    excluded_[direction].set(u, v);
    excluded_[direction].set(v, u);
  }
}

bool SearchInfo::apply(const Augmentation& aug) {
  int u = aug.u, v = aug.v, i = aug.direction;
  if (u == v) throw std::invalid_argument("augmentation on a self-pair");
  if (aug.sigma == Sigma::Plus) {
    if (is_excluded(u, v, i)) return false;
    if (is_required(u, v, i)) return true;
    required_[i].set(u, v);
    required_[i].set(v, u);
    queue_.push_back(aug);
    // P3 closure: required in all but one direction forces exclusion there.
    int free_dir = -1;
    int missing = 0;
    for (int k = 0; k < d_; ++k) {
      if (!is_required(u, v, k)) {
        ++missing;
        if (!is_excluded(u, v, k)) free_dir = k;
      }
    }
    if (missing == 0) return false;
    if (missing == 1 && free_dir >= 0) return apply(u, v, Sigma::Minus, free_dir);
    return true;
  }
  if (is_required(u, v, i)) return false;
  if (is_excluded(u, v, i)) return true;
  excluded_[i].set(u, v);
  excluded_[i].set(v, u);
  queue_.push_back(aug);
  return true;
}

bool SearchInfo::states_equal(const SearchInfo& other) const {
  if (n_ != other.n_ || d_ != other.d_) return false;
  for (int i = 0; i < d_; ++i)
    if (!(required_[i] == other.required_[i]) || !(excluded_[i] == other.excluded_[i]))
      return false;
  return true;
}

bool indistinguishable_boxes(const SearchInfo& info, const BoxSubset& boxes, int b, int c) {
  if (b == c) return true;
  if (boxes.sizes[b] != boxes.sizes[c]) return false;
  for (int i = 0; i < info.dim(); ++i) {
    for (int z = 0; z < info.n(); ++z) {
      if (z == b || z == c) continue;
      if (info.state(b, z, i) != info.state(c, z, i)) return false;
    }
  }
  return true;
}

std::optional<SearchInfo> init_root(const BoxSubset& boxes, bool fix_type_cliques) {
  int n = boxes.size();
  int d = boxes.dim();
  SearchInfo info(n, d);

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int i = 0; i < d; ++i)
        if (boxes.width(u, i) + boxes.width(v, i) > boxes.container(i))
          if (!info.apply(u, v, Sigma::Plus, i)) return std::nullopt;

  if (fix_type_cliques) {
    // Every packing class carries, per direction, a clique of size
    // ceil(n_t / floor(W_i / w_i)) inside type t; fixing one such clique on
    // the first boxes of the type only renumbers equal boxes. One direction
    // per type, the one needing the largest clique.
    int start = 0;
    while (start < n) {
      int end = start;
      while (end < n && boxes.type_of[end] == boxes.type_of[start]) ++end;
      int count = end - start;
      if (count >= 2) {
        int best_dir = -1;
        std::int64_t best_k = 1;
        for (int i = 0; i < d; ++i) {
          std::int64_t q = boxes.container(i) / boxes.width(start, i);
          std::int64_t k = (count + q - 1) / q;
          if (k > best_k) { best_k = k; best_dir = i; }
        }
        if (best_dir >= 0 && best_k >= 2) {
          for (int u = start; u < start + best_k; ++u)
            for (int v = u + 1; v < start + best_k; ++v)
              if (!info.apply(u, v, Sigma::Plus, best_dir)) return std::nullopt;
        }
      }
      start = end;
    }
  }
  return info;
}

}  // namespace opack
