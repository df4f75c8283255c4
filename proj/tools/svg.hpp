// Cross-section and planar SVG rendering. This is the one place in the
// project where floating point is allowed; nothing here feeds back into any
// exact decision.

#pragma once

#include "dsg/scene.hpp"

#include <string>

namespace dsgtool {

struct RenderView {
  enum class Kind { PlaneX0, PlaneY0, SliceZ, Planar } kind;
  double z = 0.0;  // SliceZ only
};

// Parses "x=0", "y=0", "z=<value>", "planar". Throws std::invalid_argument.
RenderView parse_view(const std::string& spec);

// SVG 1.1 document; no timestamp unless requested.
std::string render_svg(const dsg::Scene& scene, const RenderView& view,
                       bool timestamp_comment);

}  // namespace dsgtool
