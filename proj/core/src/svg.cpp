#include "opack/svg.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace opack {

std::string emit_svg(const Instance& instance, const Packing& packing) {
  if (instance.dim() != 2) throw std::invalid_argument("SVG output needs a two-dimensional packing");
  std::vector<int> subset;
  for (const auto& [id, pos] : packing) subset.push_back(id);
  if (auto violation = validate_packing(instance, subset, packing))
    throw std::invalid_argument("refusing to draw an invalid packing: " + violation->message);

  const double canvas_w = 800.0;
  const double scale = canvas_w / (double)instance.container(0);
  const double canvas_h = scale * (double)instance.container(1);
  const double margin = 10.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas_w + 2 * margin
      << "\" height=\"" << canvas_h + 2 * margin << "\" viewBox=\"0 0 " << canvas_w + 2 * margin
      << " " << canvas_h + 2 * margin << "\">\n";
  out << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << canvas_w
      << "\" height=\"" << canvas_h
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (const auto& [id, pos] : packing) {
    const Box& box = instance.box(id);
    double x = margin + scale * (double)pos[0];
    // Mathematical orientation: the origin sits at the bottom-left corner.
    double y = margin + canvas_h - scale * (double)(pos[1] + box.sizes[1]);
    double w = scale * (double)box.sizes[0];
    double h = scale * (double)box.sizes[1];
    int hue = (box.type_index * 137) % 360;
    out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"hsl(" << hue << ",65%,70%)\" stroke=\"black\" stroke-width=\"0.8\">"
        << "<title>box " << id << " type " << box.type_index << " at (" << pos[0] << ","
        << pos[1] << ")</title></rect>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace opack
