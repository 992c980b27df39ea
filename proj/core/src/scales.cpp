#include "opack/scales.hpp"

#include <stdexcept>

namespace opack {

Rational u_k(const Rational& x, int k) {
  if (k < 1) throw std::domain_error("u_k needs k >= 1");
  if (x < Rational(0) || x > Rational(1)) throw std::domain_error("u_k needs x in [0,1]");
  Rational scaled = Rational(k + 1) * x;
  if (scaled.is_integer()) return x;
  return Rational(scaled.floor(), k);
}

Rational ConservativeScale::width(const Instance& instance, const Box& box, int dir) const {
  Rational normalized(box.sizes[dir], instance.container(dir));
  if (dir != direction) return normalized;
  return u_k(normalized, k);
}

Rational ConservativeScale::volume(const Instance& instance, const Box& box) const {
  Rational v(1);
  for (int i = 0; i < instance.dim(); ++i) v *= width(instance, box, i);
  return v;
}

Rational ConservativeScale::volume(const Instance& instance, int type_index) const {
  return volume(instance, instance.box(instance.first_id(type_index)));
}

std::vector<ConservativeScale> bound_scale_family(const Instance& instance) {
  std::vector<ConservativeScale> family{ConservativeScale::identity()};
  for (int i = 0; i < instance.dim(); ++i)
    for (int k = 1; k <= 4; ++k) family.push_back(ConservativeScale::dff(i, k));
  return family;
}

std::vector<ConservativeScale> wide_scale_family(const Instance& instance) {
  std::vector<ConservativeScale> family{ConservativeScale::identity()};
  for (int i = 0; i < instance.dim(); ++i) {
    int max_k = (int)(instance.container(i) / 2);
    for (int k = 1; k <= max_k; ++k) family.push_back(ConservativeScale::dff(i, k));
  }
  return family;
}

Rational transformed_volume(const Instance& instance, const std::vector<int>& subset,
                            const ConservativeScale& scale) {
  Rational sum(0);
  for (int id : subset) sum += scale.volume(instance, instance.box(id));
  return sum;
}

VolumeVerdict volume_criterion(const Instance& instance, const std::vector<int>& subset,
                               const std::vector<ConservativeScale>& family) {
  for (const ConservativeScale& scale : family)
    if (transformed_volume(instance, subset, scale) > Rational(1))
      return VolumeVerdict::Infeasible;
  return VolumeVerdict::Unknown;
}

}  // namespace opack
