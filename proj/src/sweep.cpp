#include "riskmetrics/sweep.hpp"

#include "riskmetrics/errors.hpp"
#include "riskmetrics/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace riskmetrics {

std::vector<double> GridSpec::default_contour_levels() {
    std::vector<double> levels;
    for (int k = 51; k <= 60; ++k) {
        levels.push_back(k / 100.0);
    }
    return levels;
}

void GridSpec::validate() const {
    if (prevalences.empty()) {
        throw InvalidParams("at least one prevalence is required");
    }
    for (double f : prevalences) {
        if (!std::isfinite(f) || f <= 0.0 || f >= 1.0) {
            throw InvalidParams("prevalence " + std::to_string(f) + " must lie in (0, 1)");
        }
    }
    if (!std::isfinite(p0_min) || !std::isfinite(p0_max) || p0_min <= 0.0 || p0_max >= 1.0 ||
        !(p0_min < p0_max)) {
        throw InvalidParams("p0 range must satisfy 0 < p0_min < p0_max < 1");
    }
    if (!std::isfinite(rr_min) || !std::isfinite(rr_max) || rr_min <= 0.0 || !(rr_min < rr_max)) {
        throw InvalidParams("rr range must satisfy 0 < rr_min < rr_max");
    }
    if (resolution < 2) {
        throw InvalidParams("resolution must be at least 2, got " + std::to_string(resolution));
    }
    for (double level : contour_levels) {
        if (!std::isfinite(level)) {
            throw InvalidParams("contour levels must be finite");
        }
    }
}

std::vector<double> linear_axis(double lo, double hi, int points) {
    std::vector<double> axis(static_cast<std::size_t>(points));
    const int last = points - 1;
    for (int k = 0; k < points; ++k) {
        axis[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / last;
    }
    axis.back() = hi;
    return axis;
}

MeasureGrid::Range MeasureGrid::c_range() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < c_values.size(); ++k) {
        if (!mask[k]) {
            lo = std::min(lo, c_values[k]);
            hi = std::max(hi, c_values[k]);
        }
    }
    if (lo > hi) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {nan, nan};
    }
    return {lo, hi};
}

MeasureGrid evaluate_grid(const GridSpec &spec, double prevalence) {
    spec.validate();
    if (std::find(spec.prevalences.begin(), spec.prevalences.end(), prevalence) ==
        spec.prevalences.end()) {
        throw InvalidParams("prevalence " + std::to_string(prevalence) + " is not part of the grid spec");
    }

    MeasureGrid grid;
    grid.prevalence = prevalence;
    grid.p0_axis = linear_axis(spec.p0_min, spec.p0_max, spec.resolution);
    grid.rr_axis = linear_axis(spec.rr_min, spec.rr_max, spec.resolution);
    grid.par_axis.reserve(grid.rows());
    for (double rr : grid.rr_axis) {
        grid.par_axis.push_back(par(prevalence, rr));
    }

    grid.c_values.assign(grid.rows() * grid.cols(), std::numeric_limits<double>::quiet_NaN());
    grid.mask.assign(grid.rows() * grid.cols(), false);
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        const double rr = grid.rr_axis[i];
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            const double p0 = grid.p0_axis[j];
            const std::size_t k = i * grid.cols() + j;
            if (rr * p0 > 1.0) {
                grid.mask[k] = true;
                continue;
            }
            grid.c_values[k] = derive_measures(PopulationParams{prevalence, p0, rr}).c_index;
        }
    }
    return grid;
}

std::vector<MeasureGrid> evaluate_all(const GridSpec &spec) {
    std::vector<MeasureGrid> grids;
    grids.reserve(spec.prevalences.size());
    for (double f : spec.prevalences) {
        grids.push_back(evaluate_grid(spec, f));
    }
    return grids;
}

} // namespace riskmetrics
