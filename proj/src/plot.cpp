#include "riskmetrics/plot.hpp"

#include "riskmetrics/errors.hpp"
#include "riskmetrics/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>

namespace riskmetrics {

namespace {

constexpr double kPanelWidth = 400.0;
constexpr double kPanelHeight = 360.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 78.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 60.0;
constexpr double kTickLength = 5.0;

constexpr const char *kContourColours[] = {"#1b4f72", "#2874a6", "#148f77", "#1e8449", "#7d6608",
                                           "#b9770e", "#a04000", "#943126", "#76448a", "#5b2c6f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string level_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string percent_label(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * fraction);
    return buf;
}

// Data to panel-local pixel coordinates; SVG y grows downwards.
struct Frame {
    double x0, x1, y0, y1;

    double plot_width() const { return kPanelWidth - kMarginLeft - kMarginRight; }
    double plot_height() const { return kPanelHeight - kMarginTop - kMarginBottom; }
    double px(double x) const { return kMarginLeft + (x - x0) / (x1 - x0) * plot_width(); }
    double py(double y) const { return kMarginTop + (y1 - y) / (y1 - y0) * plot_height(); }
};

void emit_masked_cells(std::ostringstream &out, const MeasureGrid &grid, const Frame &frame) {
    bool any = false;
    for (bool m : grid.mask) {
        any = any || m;
    }
    if (!any) {
        return;
    }
    const double dx = frame.plot_width() / static_cast<double>(grid.cols() - 1);
    const double dy = frame.plot_height() / static_cast<double>(grid.rows() - 1);
    out << "    <g class=\"masked\" fill=\"#dddddd\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            if (!grid.masked(i, j)) {
                continue;
            }
            const double cx = frame.px(grid.p0_axis[j]);
            const double cy = frame.py(grid.rr_axis[i]);
            const double left = std::max(kMarginLeft, cx - dx / 2);
            const double right = std::min(kMarginLeft + frame.plot_width(), cx + dx / 2);
            const double top = std::max(kMarginTop, cy - dy / 2);
            const double bottom = std::min(kMarginTop + frame.plot_height(), cy + dy / 2);
            out << "      <rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
                << num(right - left) << "\" height=\"" << num(bottom - top) << "\"/>\n";
        }
    }
    out << "    </g>\n";
}

void emit_axes(std::ostringstream &out, const MeasureGrid &grid, const Frame &frame) {
    const double left = kMarginLeft;
    const double right = kMarginLeft + frame.plot_width();
    const double top = kMarginTop;
    const double bottom = kMarginTop + frame.plot_height();

    out << "    <g class=\"axis x-axis\">\n";
    for (const Tick &t : nice_ticks(frame.x0, frame.x1)) {
        const double x = frame.px(t.value);
        out << "      <line x1=\"" << num(x) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(bottom + kTickLength) << "\" stroke=\"#000000\"/>\n";
        out << "      <text x=\"" << num(x) << "\" y=\"" << num(bottom + 18) << "\" text-anchor=\"middle\">"
            << t.label << "</text>\n";
    }
    out << "      <text class=\"axis-label\" x=\"" << num((left + right) / 2) << "\" y=\""
        << num(bottom + 40) << "\" text-anchor=\"middle\">risk among unexposed, p0</text>\n";
    out << "    </g>\n";

    const auto rr_ticks = nice_ticks(frame.y0, frame.y1);
    out << "    <g class=\"axis rr-axis\">\n";
    for (const Tick &t : rr_ticks) {
        const double y = frame.py(t.value);
        out << "      <line x1=\"" << num(left - kTickLength) << "\" y1=\"" << num(y) << "\" x2=\""
            << num(left) << "\" y2=\"" << num(y) << "\" stroke=\"#000000\"/>\n";
        out << "      <text x=\"" << num(left - 8) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">"
            << t.label << "</text>\n";
    }
    const double mid_y = (top + bottom) / 2;
    out << "      <text class=\"axis-label\" x=\"" << num(left - 48) << "\" y=\"" << num(mid_y)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(left - 48) << " " << num(mid_y)
        << ")\">relative risk, RR</text>\n";
    out << "    </g>\n";

    // PAR is a bijection of RR at fixed prevalence, so the right axis reuses
    // the RR tick positions.
    out << "    <g class=\"axis par-axis\">\n";
    for (const Tick &t : rr_ticks) {
        const double y = frame.py(t.value);
        out << "      <line x1=\"" << num(right) << "\" y1=\"" << num(y) << "\" x2=\""
            << num(right + kTickLength) << "\" y2=\"" << num(y) << "\" stroke=\"#000000\"/>\n";
        out << "      <text x=\"" << num(right + 8) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"start\">"
            << percent_label(par(grid.prevalence, t.value)) << "</text>\n";
    }
    out << "      <text class=\"axis-label\" x=\"" << num(right + 62) << "\" y=\"" << num(mid_y)
        << "\" text-anchor=\"middle\" transform=\"rotate(90 " << num(right + 62) << " " << num(mid_y)
        << ")\">population-attributable risk, PAR</text>\n";
    out << "    </g>\n";
}

void emit_contours(std::ostringstream &out, const MeasureGrid &grid, const GridSpec &spec,
                   const Frame &frame) {
    out << "    <g class=\"contours\" fill=\"none\" stroke-width=\"1.2\">\n";
    std::size_t colour = 0;
    for (double level : spec.contour_levels) {
        const ContourSet set = extract_contours(grid, level);
        const char *stroke = kContourColours[colour++ % std::size(kContourColours)];
        if (set.polylines.empty()) {
            continue;
        }
        out << "      <g class=\"contour\" data-level=\"" << level_label(level) << "\" stroke=\"" << stroke
            << "\">\n";
        const std::vector<Point> *longest = &set.polylines.front();
        for (const auto &line : set.polylines) {
            if (line.size() > longest->size()) {
                longest = &line;
            }
            out << "        <path d=\"";
            for (std::size_t k = 0; k < line.size(); ++k) {
                out << (k == 0 ? "M" : " L") << num(frame.px(line[k].p0)) << "," << num(frame.py(line[k].rr));
            }
            out << "\"/>\n";
        }
        const Point &anchor = (*longest)[longest->size() / 2];
        out << "        <text class=\"contour-label\" x=\"" << num(frame.px(anchor.p0)) << "\" y=\""
            << num(frame.py(anchor.rr) - 3) << "\" fill=\"" << stroke << "\" stroke=\"none\" font-size=\"9\""
            << " text-anchor=\"middle\">" << level_label(level) << "</text>\n";
        out << "      </g>\n";
    }
    out << "    </g>\n";
}

} // namespace

std::vector<Tick> nice_ticks(double lo, double hi, int target) {
    std::vector<Tick> ticks;
    if (!(hi > lo) || target < 1) {
        return ticks;
    }
    const double raw = (hi - lo) / target;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / magnitude;
    const double factor = norm < 1.5 ? 1.0 : norm < 3.0 ? 2.0 : norm < 7.0 ? 5.0 : 10.0;
    const double step = factor * magnitude;
    const int decimals = std::max(0, -static_cast<int>(std::floor(std::log10(step) + 1e-9)));

    const auto first = static_cast<long long>(std::ceil(lo / step - 1e-9));
    const auto last = static_cast<long long>(std::floor(hi / step + 1e-9));
    for (long long k = first; k <= last; ++k) {
        const double value = static_cast<double>(k) * step;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
        ticks.push_back({value, buf});
    }
    return ticks;
}

std::string render_svg(const std::vector<MeasureGrid> &grids, const GridSpec &spec) {
    if (grids.empty()) {
        throw RenderError("nothing to render: the grid list is empty");
    }
    for (const auto &grid : grids) {
        if (grid.rows() < 2 || grid.cols() < 2) {
            throw RenderError("every grid needs at least 2 x 2 nodes");
        }
    }

    const double width = kPanelWidth * static_cast<double>(grids.size());
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
        << "\" height=\"" << num(kPanelHeight) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(kPanelHeight) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "  <title>c-index contours over incidence among unexposed and relative risk</title>\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(kPanelHeight)
        << "\" fill=\"#ffffff\"/>\n";

    for (std::size_t p = 0; p < grids.size(); ++p) {
        const MeasureGrid &grid = grids[p];
        const Frame frame{grid.p0_axis.front(), grid.p0_axis.back(), grid.rr_axis.front(),
                          grid.rr_axis.back()};
        const char letter = static_cast<char>('a' + static_cast<int>(p % 26));

        char title[96];
        std::snprintf(title, sizeof(title), "(%c) risk factor prevalence %g%%", letter,
                      100.0 * grid.prevalence);

        out << "  <g class=\"panel\" id=\"panel-" << letter << "\" transform=\"translate("
            << num(kPanelWidth * static_cast<double>(p)) << ",0)\">\n";
        out << "    <text class=\"panel-title\" x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop - 14)
            << "\" font-size=\"13\">" << title << "</text>\n";
        emit_masked_cells(out, grid, frame);
        emit_contours(out, grid, spec, frame);
        out << "    <rect class=\"plot-area\" x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop)
            << "\" width=\"" << num(frame.plot_width()) << "\" height=\"" << num(frame.plot_height())
            << "\" fill=\"none\" stroke=\"#000000\"/>\n";
        emit_axes(out, grid, frame);
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace riskmetrics
