#pragma once

#include <string>

#include "conway/configuration.hpp"

namespace conway {

struct RenderOptions {
  bool conway_circle = false;  // circle about the incenter through the six points
  bool anti_circles = false;   // the three four-point circles
  bool dussau_lines = false;   // (A'C''), (B'A''), (C'B'') plus the Nagel point
  bool labels = true;
};

/// Standalone SVG of the configuration: triangle edges, the six labeled
/// points, and the requested extras. Deterministic output: fixed element
/// order, all coordinates printed with 12 significant digits.
std::string render_svg(const Configuration& cfg, const RenderOptions& options);

}  // namespace conway
