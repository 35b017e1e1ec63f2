#pragma once

// SVG rendering of 2D polytopes: subdivisions, bodies and inscribed
// simplices. This is the one lossy output of the toolkit (coordinates are
// scaled to doubles for drawing); vertex labels keep the exact "p/q" text.

#include "okb/polytope.hpp"

#include <string>
#include <vector>

namespace okb {

// Fixed 600x600 viewbox; scale chosen from the common bounding box. Labels
// are optional per polytope. Dimension must be 2.
std::string plot_svg(const std::vector<Polytope>& polytopes,
                     const std::vector<std::string>& labels);

}  // namespace okb
