#pragma once

#include "riskmetrics/sweep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace riskmetrics {

/// `v` printed with 12 significant digits ("%.12g").
std::string format_sig12(double v);

/// `v` rounded to 12 significant digits, so a JSON writer emits at most 12.
double round_sig12(double v);

/// Columns f,p0,rr,par,c_index,masked in that order; one line per node,
/// grids in order, rows by rr then columns by p0. Masked nodes leave
/// c_index empty.
std::string grids_to_csv(const std::vector<MeasureGrid> &grids);

nlohmann::ordered_json spec_to_json(const GridSpec &spec);

/// {"spec": ..., "grids": [{"prevalence", "p0_axis", "rr_axis", "par_axis",
/// "c_values", "mask"}, ...]} with matrices as arrays of rows and masked
/// c-values as null.
nlohmann::ordered_json grids_to_json(const GridSpec &spec, const std::vector<MeasureGrid> &grids);

} // namespace riskmetrics
