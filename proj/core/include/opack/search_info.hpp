#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opack/bitmatrix.hpp"
#include "opack/instance.hpp"

namespace opack {

enum class EdgeState : std::uint8_t { Free, Required, Excluded };
enum class Sigma : std::uint8_t { Plus, Minus };

// An augmentation triple (e, sigma, i): edge {u,v}, sign, direction.
struct Augmentation {
  int u = 0;
  int v = 0;
  Sigma sigma = Sigma::Plus;
  int direction = 0;
};

// The boxes a solve works on: a subset of instance boxes with dense local
// ids. Local ids are ascending in the original ids, so boxes of one type
// stay contiguous.
struct BoxSubset {
  static BoxSubset of(const Instance& instance, std::vector<int> ids);
  static BoxSubset whole(const Instance& instance);

  const Instance* instance = nullptr;
  std::vector<int> ids;                      // local -> original id
  std::vector<std::vector<Extent>> sizes;    // local -> size vector
  std::vector<int> type_of;                  // local -> type index

  int size() const { return (int)ids.size(); }
  int dim() const { return instance->dim(); }
  Extent container(int direction) const { return instance->container(direction); }
  Extent width(int local, int direction) const { return sizes[local][direction]; }
};

// Per-direction three-state edge labeling (the search information), plus the
// queue of augmentations awaiting propagation. Kept P3-closed at all times:
// no pair is required everywhere, and a pair required in all but one
// direction is excluded in the last one.
class SearchInfo {
 public:
  SearchInfo() = default;
  SearchInfo(int num_boxes, int dimensions);

  int n() const { return n_; }
  int dim() const { return d_; }

  EdgeState state(int u, int v, int direction) const {
    if (required_[direction].test(u, v)) return EdgeState::Required;
    if (excluded_[direction].test(u, v)) return EdgeState::Excluded;
    return EdgeState::Free;
  }
  bool is_required(int u, int v, int direction) const { return required_[direction].test(u, v); }
  bool is_excluded(int u, int v, int direction) const { return excluded_[direction].test(u, v); }
  bool is_free(int u, int v, int direction) const {
    return !is_required(u, v, direction) && !is_excluded(u, v, direction);
  }

  const BitMatrix& required(int direction) const { return required_[direction]; }
  const BitMatrix& excluded(int direction) const { return excluded_[direction]; }

  // Applies one augmentation: writes the state, queues the triple when the
  // state changed, and closes under P3 (derived exclusions are queued too).
  // Returns false on conflict: the edge carries the opposite state already,
  // or closure would require the pair in every direction.
  bool apply(const Augmentation& aug);
  bool apply(int u, int v, Sigma sigma, int direction) {
    return apply(Augmentation{u, v, sigma, direction});
  }

  bool queue_empty() const { return queue_head_ >= queue_.size(); }
  Augmentation pop_queue();
  void clear_queue() { queue_head_ = 0; queue_.clear(); }

  // Direct state write without closure, queueing or conflict checks; for
  // building ad-hoc states in callers that manage closure themselves.
  void set_state_raw(int u, int v, int direction, EdgeState state);

  bool states_equal(const SearchInfo& other) const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<BitMatrix> required_;
  std::vector<BitMatrix> excluded_;
  std::vector<Augmentation> queue_;
  std::size_t queue_head_ = 0;
};

// True iff b and c have equal size vectors and identical search information
// towards every third box, in every direction.
bool indistinguishable_boxes(const SearchInfo& info, const BoxSubset& boxes, int b, int c);

// Root initialization: pairs too wide to sit side by side get required
// edges, and one clique per box type is fixed in the direction needing the
// largest one. Everything lands in the queue; nullopt when closure
// conflicts, which proves the subset infeasible.
std::optional<SearchInfo> init_root(const BoxSubset& boxes, bool fix_type_cliques = true);

}  // namespace opack
