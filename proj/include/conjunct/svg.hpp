#pragma once

#include <cstddef>
#include <string>

#include "conjunct/series.hpp"

namespace conjunct {

/// 800x800 monochrome drawing of `count` consecutive conjunctions on a circle:
/// one labelled marker per event and one polygon per family, told apart by
/// dash pattern. East (counter-clockwise) is drawn counter-clockwise.
std::string render_trigon_svg(const SeriesParams& params, std::size_t count);

}  // namespace conjunct
