#include "riskmetrics/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace riskmetrics {

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round_sig12(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    return std::strtod(format_sig12(v).c_str(), nullptr);
}

std::string grids_to_csv(const std::vector<MeasureGrid> &grids) {
    std::ostringstream out;
    out << "f,p0,rr,par,c_index,masked\n";
    for (const auto &grid : grids) {
        const std::string f = format_sig12(grid.prevalence);
        for (std::size_t i = 0; i < grid.rows(); ++i) {
            const std::string rr = format_sig12(grid.rr_axis[i]);
            const std::string par = format_sig12(grid.par_axis[i]);
            for (std::size_t j = 0; j < grid.cols(); ++j) {
                out << f << ',' << format_sig12(grid.p0_axis[j]) << ',' << rr << ',' << par << ',';
                if (grid.masked(i, j)) {
                    out << ",true\n";
                } else {
                    out << format_sig12(grid.c(i, j)) << ",false\n";
                }
            }
        }
    }
    return out.str();
}

namespace {

nlohmann::ordered_json rounded_array(const std::vector<double> &values) {
    auto arr = nlohmann::ordered_json::array();
    for (double v : values) {
        arr.push_back(round_sig12(v));
    }
    return arr;
}

} // namespace

nlohmann::ordered_json spec_to_json(const GridSpec &spec) {
    nlohmann::ordered_json j;
    j["prevalences"] = rounded_array(spec.prevalences);
    j["p0_min"] = round_sig12(spec.p0_min);
    j["p0_max"] = round_sig12(spec.p0_max);
    j["rr_min"] = round_sig12(spec.rr_min);
    j["rr_max"] = round_sig12(spec.rr_max);
    j["resolution"] = spec.resolution;
    j["contour_levels"] = rounded_array(spec.contour_levels);
    return j;
}

nlohmann::ordered_json grids_to_json(const GridSpec &spec, const std::vector<MeasureGrid> &grids) {
    nlohmann::ordered_json doc;
    doc["spec"] = spec_to_json(spec);
    auto out_grids = nlohmann::ordered_json::array();
    for (const auto &grid : grids) {
        nlohmann::ordered_json g;
        g["prevalence"] = round_sig12(grid.prevalence);
        g["p0_axis"] = rounded_array(grid.p0_axis);
        g["rr_axis"] = rounded_array(grid.rr_axis);
        g["par_axis"] = rounded_array(grid.par_axis);
        auto c_rows = nlohmann::ordered_json::array();
        auto mask_rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < grid.rows(); ++i) {
            auto c_row = nlohmann::ordered_json::array();
            auto mask_row = nlohmann::ordered_json::array();
            for (std::size_t j = 0; j < grid.cols(); ++j) {
                const bool masked = grid.masked(i, j);
                mask_row.push_back(masked);
                if (masked) {
                    c_row.push_back(nullptr);
                } else {
                    c_row.push_back(round_sig12(grid.c(i, j)));
                }
            }
            c_rows.push_back(std::move(c_row));
            mask_rows.push_back(std::move(mask_row));
        }
        g["c_values"] = std::move(c_rows);
        g["mask"] = std::move(mask_rows);
        out_grids.push_back(std::move(g));
    }
    doc["grids"] = std::move(out_grids);
    return doc;
}

} // namespace riskmetrics
