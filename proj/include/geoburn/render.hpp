#pragma once

#include <string>

#include "geoburn/burning.hpp"
#include "geoburn/geometry.hpp"

namespace geoburn {

/// SVG with one frame per step 1..b, stacked top to bottom. Frame t shows
/// every point (filled once burnt) and each ignited source as a circle of
/// radius t - j. Throws std::invalid_argument if the schedule has more than
/// b sources, and InvalidSchedule if it breaks its model.
std::string render_svg(const PointSet& P, const Schedule& s, int b);

}  // namespace geoburn
