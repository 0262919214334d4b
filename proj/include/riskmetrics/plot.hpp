#pragma once

#include "riskmetrics/sweep.hpp"

#include <string>
#include <vector>

namespace riskmetrics {

struct Tick {
    double value;
    std::string label;
};

/// Round-number ticks (steps of 1, 2 or 5 times a power of ten) inside
/// [lo, hi], aiming for roughly `target` intervals.
std::vector<Tick> nice_ticks(double lo, double hi, int target = 5);

/// Self-contained SVG with one panel per grid, laid out left to right and
/// lettered (a), (b), ... in order. Each panel has p0 on the x axis, rr on
/// the left axis and the matching PAR values on the right axis, plus the
/// spec's contour levels with labels. Output depends only on the inputs.
/// Throws RenderError for an empty grid list.
std::string render_svg(const std::vector<MeasureGrid> &grids, const GridSpec &spec);

} // namespace riskmetrics
