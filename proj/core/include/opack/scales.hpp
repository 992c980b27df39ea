#pragma once

#include <vector>

#include "opack/instance.hpp"
#include "opack/rational.hpp"
#include "opack/search_info.hpp"

namespace opack {

// The parametric dual feasible function on [0,1]: x itself when (k+1)x is
// an integer, floor((k+1)x)/k otherwise. Exact rational arithmetic.
Rational u_k(const Rational& x, int k);

// A conservative scale: identity, or u^(k) applied to the normalized widths
// of one direction.
struct ConservativeScale {
  int direction = -1;  // -1: identity
  int k = 1;

  static ConservativeScale identity() { return {}; }
  static ConservativeScale dff(int direction, int k) { return {direction, k}; }

  // Transformed normalized width of `box` in `direction`.
  Rational width(const Instance& instance, const Box& box, int direction) const;
  // Product of transformed widths over all directions.
  Rational volume(const Instance& instance, const Box& box) const;
  Rational volume(const Instance& instance, int type_index) const;
};

// Scale families used throughout: the bound family caps k at 4; the wide
// family runs k up to floor(W_i / 2) per direction. Identity included.
std::vector<ConservativeScale> bound_scale_family(const Instance& instance);
std::vector<ConservativeScale> wide_scale_family(const Instance& instance);

// Sum of transformed volumes of a subset of boxes.
Rational transformed_volume(const Instance& instance, const std::vector<int>& subset,
                            const ConservativeScale& scale);

enum class VolumeVerdict { Infeasible, Unknown };

// Infeasible iff some scale of the family pushes the subset volume over the
// container volume.
VolumeVerdict volume_criterion(const Instance& instance, const std::vector<int>& subset,
                               const std::vector<ConservativeScale>& family);

}  // namespace opack
