#pragma once

#include <cstddef>
#include <vector>

namespace riskmetrics {

/// Sweep over (p0, rr) at a list of fixed prevalences.
struct GridSpec {
    std::vector<double> prevalences{0.5, 0.2, 0.1};
    double p0_min = 0.001;
    double p0_max = 0.10;
    double rr_min = 1.0;
    double rr_max = 3.0;
    int resolution = 201;
    std::vector<double> contour_levels = default_contour_levels();

    /// 0.51, 0.52, ..., 0.60.
    static std::vector<double> default_contour_levels();

    /// Throws InvalidParams unless p0_min < p0_max, rr_min < rr_max,
    /// resolution >= 2 and every prevalence is in (0, 1).
    void validate() const;
};

/// Evenly spaced axis with both ends hit exactly.
std::vector<double> linear_axis(double lo, double hi, int points);

/// c-index lattice for one prevalence. Row i follows rr_axis[i], column j
/// follows p0_axis[j]. Masked cells (rr * p0 > 1) hold NaN.
struct MeasureGrid {
    double prevalence = 0.0;
    std::vector<double> p0_axis;
    std::vector<double> rr_axis;
    /// par_axis[i] = par(prevalence, rr_axis[i]).
    std::vector<double> par_axis;
    std::vector<double> c_values;
    std::vector<bool> mask;

    std::size_t rows() const noexcept { return rr_axis.size(); }
    std::size_t cols() const noexcept { return p0_axis.size(); }
    double c(std::size_t i, std::size_t j) const { return c_values[i * cols() + j]; }
    bool masked(std::size_t i, std::size_t j) const { return mask[i * cols() + j]; }

    struct Range {
        double min;
        double max;
    };
    /// Extremes over unmasked cells; NaN pair when every cell is masked.
    Range c_range() const;
};

struct Point {
    double p0;
    double rr;
};

struct ContourSet {
    double level = 0.0;
    std::vector<std::vector<Point>> polylines;
};

MeasureGrid evaluate_grid(const GridSpec &spec, double prevalence);

/// One grid per spec.prevalences entry, in the same order.
std::vector<MeasureGrid> evaluate_all(const GridSpec &spec);

/// Marching squares with linear interpolation along cell edges.
///
/// A corner counts as inside when its value is >= level. Cells with any
/// masked corner are skipped. Saddle cells are resolved by the mean of the
/// four corners. Segments are joined into polylines through shared edge
/// crossings; closed loops repeat their first vertex at the end. Returns an
/// empty set when the level is never crossed.
ContourSet extract_contours(const MeasureGrid &grid, double level);

} // namespace riskmetrics
