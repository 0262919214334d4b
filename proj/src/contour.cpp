#include "riskmetrics/sweep.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>

namespace riskmetrics {

namespace {

// Grid edges are identified by their lower-left node and orientation:
// horizontal edges run along p0 (node (i,j) to (i,j+1)), vertical edges
// along rr (node (i,j) to (i+1,j)).
using EdgeKey = std::uint64_t;

struct Segment {
    EdgeKey a;
    EdgeKey b;
};

class ContourTracer {
public:
    ContourTracer(const MeasureGrid &grid, double level) : grid_{grid}, level_{level} {}

    ContourSet trace() {
        collect_segments();
        return stitch();
    }

private:
    EdgeKey horizontal(std::size_t i, std::size_t j) const { return (i * grid_.cols() + j) * 2; }
    EdgeKey vertical(std::size_t i, std::size_t j) const { return (i * grid_.cols() + j) * 2 + 1; }

    bool inside(std::size_t i, std::size_t j) const { return grid_.c(i, j) >= level_; }

    // Linear interpolation along the edge, always from its lower node.
    Point crossing(EdgeKey key) const {
        const std::size_t node = key / 2;
        const std::size_t i = node / grid_.cols();
        const std::size_t j = node % grid_.cols();
        const double va = grid_.c(i, j);
        if (key % 2 == 0) {
            const double vb = grid_.c(i, j + 1);
            const double t = (level_ - va) / (vb - va);
            const double x0 = grid_.p0_axis[j];
            return {x0 + t * (grid_.p0_axis[j + 1] - x0), grid_.rr_axis[i]};
        }
        const double vb = grid_.c(i + 1, j);
        const double t = (level_ - va) / (vb - va);
        const double y0 = grid_.rr_axis[i];
        return {grid_.p0_axis[j], y0 + t * (grid_.rr_axis[i + 1] - y0)};
    }

    void add_segment(EdgeKey a, EdgeKey b) {
        const std::size_t index = segments_.size();
        segments_.push_back({a, b});
        incident_[a].push_back(index);
        incident_[b].push_back(index);
    }

    void collect_segments() {
        const std::size_t rows = grid_.rows();
        const std::size_t cols = grid_.cols();
        for (std::size_t i = 0; i + 1 < rows; ++i) {
            for (std::size_t j = 0; j + 1 < cols; ++j) {
                if (grid_.masked(i, j) || grid_.masked(i, j + 1) || grid_.masked(i + 1, j) ||
                    grid_.masked(i + 1, j + 1)) {
                    continue;
                }
                const bool in00 = inside(i, j);
                const bool in01 = inside(i, j + 1);
                const bool in10 = inside(i + 1, j);
                const bool in11 = inside(i + 1, j + 1);

                const EdgeKey bottom = horizontal(i, j);
                const EdgeKey top = horizontal(i + 1, j);
                const EdgeKey left = vertical(i, j);
                const EdgeKey right = vertical(i, j + 1);

                std::array<EdgeKey, 4> crossed{};
                std::size_t n = 0;
                if (in00 != in01) crossed[n++] = bottom;
                if (in01 != in11) crossed[n++] = right;
                if (in11 != in10) crossed[n++] = top;
                if (in10 != in00) crossed[n++] = left;

                if (n == 2) {
                    add_segment(crossed[0], crossed[1]);
                } else if (n == 4) {
                    // Saddle: the cell centre decides which diagonal pair is joined.
                    const double centre =
                        0.25 * (grid_.c(i, j) + grid_.c(i, j + 1) + grid_.c(i + 1, j) + grid_.c(i + 1, j + 1));
                    if ((centre >= level_) == in00) {
                        add_segment(bottom, right);
                        add_segment(top, left);
                    } else {
                        add_segment(left, bottom);
                        add_segment(right, top);
                    }
                }
            }
        }
    }

    void walk(std::size_t first, EdgeKey start, std::vector<Point> &line) {
        line.push_back(crossing(start));
        std::size_t current = first;
        EdgeKey from = start;
        while (true) {
            used_[current] = true;
            const Segment &seg = segments_[current];
            const EdgeKey to = seg.a == from ? seg.b : seg.a;
            line.push_back(crossing(to));
            bool advanced = false;
            for (std::size_t next : incident_[to]) {
                if (!used_[next]) {
                    current = next;
                    from = to;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                return;
            }
        }
    }

    ContourSet stitch() {
        ContourSet result;
        result.level = level_;
        used_.assign(segments_.size(), false);

        // Open polylines start at edges touched by a single segment.
        for (std::size_t s = 0; s < segments_.size(); ++s) {
            for (EdgeKey end : {segments_[s].a, segments_[s].b}) {
                if (!used_[s] && incident_[end].size() == 1) {
                    std::vector<Point> line;
                    walk(s, end, line);
                    result.polylines.push_back(std::move(line));
                }
            }
        }
        // Whatever remains forms closed loops.
        for (std::size_t s = 0; s < segments_.size(); ++s) {
            if (!used_[s]) {
                std::vector<Point> line;
                walk(s, segments_[s].a, line);
                result.polylines.push_back(std::move(line));
            }
        }
        return result;
    }

    const MeasureGrid &grid_;
    double level_;
    std::vector<Segment> segments_;
    std::unordered_map<EdgeKey, std::vector<std::size_t>> incident_;
    std::vector<bool> used_;
};

} // namespace

ContourSet extract_contours(const MeasureGrid &grid, double level) {
    return ContourTracer{grid, level}.trace();
}

} // namespace riskmetrics
