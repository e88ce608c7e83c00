// Drawings of tropical curves inside the fundamental parallelogram.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropabel/curve.hpp"

namespace tropabel {

struct Segment {
  RVec2 from;
  RVec2 to;
  std::int64_t weight = 1;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Image of every edge cut along the walls of [0,1) s1 + [0,1) s2 and
/// translated into it.
std::vector<Segment> fundamental_segments(const ParamCurve& pc);

/// Standalone SVG; the viewBox is the bounding box of the parallelogram and
/// the y axis points up.
std::string render_svg(const ParamCurve& pc, const std::string& title = "");

}  // namespace tropabel
