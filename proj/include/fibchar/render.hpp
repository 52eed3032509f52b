#pragma once

#include <string>

#include "fibchar/partitions.hpp"

namespace fibchar {

// Deterministic SVG 1.1 dissection figures: unit cells for the Young
// diagram, the Durfee rectangle outlined solid, enveloping rectangles in
// distinct dash patterns, and a caption legend. Output is byte-stable across
// runs (integer coordinates, no timestamps).
std::string render_durfee_svg(const Partition& p, int l, int n, int m);

// Nested rectangle outlines for k = 0..kmax with the symbolic caption, one
// figure per family (l, n, m).
std::string render_family_svg(int l, int n, int m, int kmax);

// "k×(3k+2)" style symbolic rectangle labels used in the captions.
std::string rect_label(int rowShift, int slope, int colShift);

}  // namespace fibchar
