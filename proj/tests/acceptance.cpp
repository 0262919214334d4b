// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "oracles.hpp"

#include "cli.hpp"
#include "riskmetrics/cohort.hpp"
#include "riskmetrics/errors.hpp"
#include "riskmetrics/measures.hpp"
#include "riskmetrics/plot.hpp"
#include "riskmetrics/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

using namespace riskmetrics;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> check;
};

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

// 1. PAR values from the worked scenario: 9 and 20 percent.
Outcome par_reproduction() {
    const double low = par(0.2, 1.5);
    const double high = par(0.5, 1.5);
    const bool exact = std::abs(low - 1.0 / 11.0) <= 1e-12 && std::abs(high - 0.2) <= 1e-12;
    const bool rounded = std::round(100 * low) == 9.0 && std::round(100 * high) == 20.0;
    return {exact && rounded, fmt("par(0.2,1.5)=%.15f par(0.5,1.5)=%.15f", low, high)};
}

// 2. Largest c-index at rr = 1.5 over p0 in (0, 0.10].
Outcome c_index_bound() {
    GridSpec spec;
    spec.prevalences = {0.2, 0.5};
    spec.p0_min = 1e-4;
    spec.p0_max = 0.10;
    spec.rr_min = 1.0;
    spec.rr_max = 3.0;
    spec.resolution = 1001;
    const double bounds[] = {0.55 + 5e-3, 0.56 + 5e-3};
    double maxima[2] = {0.0, 0.0};
    bool ok = true;
    for (std::size_t g = 0; g < 2; ++g) {
        const auto grid = evaluate_grid(spec, spec.prevalences[g]);
        const std::size_t row = 250;
        if (grid.rr_axis[row] != 1.5) return {false, "rr axis does not contain 1.5"};
        for (std::size_t j = 0; j < grid.cols(); ++j) maxima[g] = std::max(maxima[g], grid.c(row, j));
        ok = ok && maxima[g] <= bounds[g];
    }
    return {ok, fmt("max c at rr=1.5: f=0.2 -> %.6f (<= 0.555), f=0.5 -> %.6f (<= 0.565)", maxima[0], maxima[1])};
}

// 3. Algebraic identities.
Outcome identity_suite() {
    oracle::Sampler rng{3};
    double worst_identity = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double a = rng.uniform(0.0, 1.0);
        const double b = rng.uniform(0.0, 1.0);
        worst_identity = std::max(worst_identity, std::abs(c_index_three_term(a, b) - c_index_closed(a, b)));
    }
    double worst_bayes = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double f = rng.uniform(1e-3, 1.0 - 1e-3);
        const double p0 = rng.uniform(1e-3, 1.0 - 1e-3);
        const double rr = rng.uniform(1.0, max_feasible_rr(p0));
        const auto m = derive_measures(PopulationParams{f, p0, rr});
        const oracle::JointTable joint{f, p0, rr};
        worst_bayes = std::max({worst_bayes, std::abs(m.f_cases - joint.f_cases()),
                                std::abs(m.par - joint.par_bayes(p0))});
    }
    return {worst_identity <= 1e-12 && worst_bayes <= 1e-12,
            fmt("max |three-term - closed| = %.3g, max Bayes deviation = %.3g", worst_identity, worst_bayes)};
}

// 4. Count formula against explicit pair enumeration.
Outcome oracle_equivalence() {
    oracle::Sampler rng{4};
    int checked = 0;
    int mismatches = 0;
    while (checked < 1000) {
        const CohortCounts counts{rng.below(26), rng.below(26), rng.below(26), rng.below(26)};
        if (counts.total() > 50 || counts.cases() == 0 || counts.controls() == 0) continue;
        if (empirical_c(counts) != oracle::enumerate_pairs_c(counts)) ++mismatches;
        ++checked;
    }
    return {mismatches == 0, fmt("%.0f tables, %.0f mismatches", checked, mismatches)};
}

// 5. Monte Carlo convergence of the pairwise statistic to the closed form.
Outcome monte_carlo() {
    oracle::Sampler rng{5};
    int within_001 = 0;
    double worst = 0.0;
    const int scenarios = 200;
    for (int k = 0; k < scenarios; ++k) {
        const double f = rng.uniform(0.05, 0.95);
        const double p0 = rng.uniform(0.01, 0.5);
        const double rr = rng.uniform(1.0, std::min(5.0, max_feasible_rr(p0)));
        const PopulationParams params{f, p0, rr};
        const auto counts = simulate_cohort({params, 200000, 1000 + static_cast<std::uint64_t>(k)});
        const double diff = std::abs(empirical_c(counts) - derive_measures(params).c_index);
        worst = std::max(worst, diff);
        if (diff < 0.01) ++within_001;
    }
    const double share = static_cast<double>(within_001) / scenarios;
    return {worst < 0.02 && share >= 0.95,
            fmt("max |empirical - closed| = %.5f (< 0.02), share < 0.01 = %.3f (>= 0.95)", worst, share)};
}

// 6. Inverse solvers.
Outcome inverse_round_trips() {
    oracle::Sampler rng{6};
    const SolverConfig cfg;
    double worst_par = 0.0;
    double worst_bisection = 0.0;
    double worst_residual = 0.0;
    int most_iterations = 0;
    for (int k = 0; k < 1000; ++k) {
        const double f = rng.uniform(0.01, 0.99);
        const double p0 = rng.uniform(0.01, 0.5);
        const double rr = rng.uniform(1.0, max_feasible_rr(p0));
        worst_par = std::max(worst_par, std::abs(rr_from_par(f, par(f, rr)) - rr));
        const SolveResult solved = solve_rr_for_target_c(f, p0, c_index(f, p0, rr), cfg);
        worst_bisection = std::max(worst_bisection, std::abs(solved.rr - rr) / std::max(1.0, rr));
        worst_residual = std::max(worst_residual, solved.residual);
        most_iterations = std::max(most_iterations, solved.iterations);
    }
    const bool ok = worst_par <= 1e-10 && worst_bisection <= cfg.abs_tolerance &&
                    worst_residual <= cfg.abs_tolerance && most_iterations <= 200;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "par inversion max err %.3g, bisection max rel err %.3g, max residual %.3g, max iterations %d",
                  worst_par, worst_bisection, worst_residual, most_iterations);
    return {ok, buf};
}

// 7. Grid monotonicity along rr and along p0 (rows with rr > 1).
Outcome monotonicity() {
    GridSpec spec;
    spec.resolution = 101;
    std::size_t comparisons = 0;
    for (const auto &grid : evaluate_all(spec)) {
        for (std::size_t i = 0; i < grid.rows(); ++i) {
            for (std::size_t j = 0; j < grid.cols(); ++j) {
                if (grid.masked(i, j)) continue;
                if (i + 1 < grid.rows() && !grid.masked(i + 1, j)) {
                    if (!(grid.c(i + 1, j) > grid.c(i, j))) return {false, "not increasing in rr"};
                    ++comparisons;
                }
                if (j + 1 < grid.cols() && grid.rr_axis[i] > 1.0 && !grid.masked(i, j + 1)) {
                    if (!(grid.c(i, j + 1) > grid.c(i, j))) return {false, "not increasing in p0"};
                    ++comparisons;
                }
            }
        }
    }
    return {true, fmt("%.0f strict comparisons over 3 panels", static_cast<double>(comparisons))};
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// 8. Figure: structure, determinism and contour fidelity.
Outcome figure_reproduction() {
    const auto dir = std::filesystem::temp_directory_path() / "riskmetrics_acceptance";
    std::filesystem::create_directories(dir);
    std::string svgs[2];
    for (int run = 0; run < 2; ++run) {
        const auto path = dir / ("fig1_" + std::to_string(run) + ".svg");
        std::ostringstream out;
        std::ostringstream err;
        if (cli::run({"plot", "--out", path.string()}, out, err) != 0) {
            return {false, "plot failed: " + err.str()};
        }
        svgs[run] = read_file(path);
    }
    const std::string &svg = svgs[0];
    const bool well_formed = oracle::xml_well_formed(svg);
    const auto panels = oracle::count_occurrences(svg, "<g class=\"panel\"");
    const auto rr_axes = oracle::count_occurrences(svg, "class=\"axis rr-axis\"");
    const auto par_axes = oracle::count_occurrences(svg, "class=\"axis par-axis\"");
    const bool deterministic = svgs[0] == svgs[1];

    const GridSpec spec;
    double worst = 0.0;
    std::size_t vertices = 0;
    for (const auto &grid : evaluate_all(spec)) {
        for (double level : spec.contour_levels) {
            for (const auto &line : extract_contours(grid, level).polylines) {
                for (const auto &v : line) {
                    worst = std::max(worst, std::abs(oracle::bilinear_c(grid, v.p0, v.rr) - level));
                    ++vertices;
                }
            }
        }
    }
    const bool ok = well_formed && panels == 3 && rr_axes == 3 && par_axes == 3 && deterministic &&
                    vertices > 0 && worst <= 1e-9;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "well-formed=%d panels=%zu rr-axes=%zu par-axes=%zu deterministic=%d vertices=%zu max "
                  "fidelity err %.3g",
                  well_formed, panels, rr_axes, par_axes, deterministic, vertices, worst);
    return {ok, buf};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "PAR reproduction", 1.0, par_reproduction},
        {"AC2", "c-index bound reproduction", 1.0, c_index_bound},
        {"AC3", "algebraic identity suite", 1.0, identity_suite},
        {"AC4", "oracle equivalence", 5.0, oracle_equivalence},
        {"AC5", "Monte Carlo convergence", 60.0, monte_carlo},
        {"AC6", "inverse round trips", 5.0, inverse_round_trips},
        {"AC7", "monotonicity", 1.0, monotonicity},
        {"AC8", "figure reproduction", 5.0, figure_reproduction},
    };

    int failures = 0;
    for (const auto &criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.check();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < criterion.budget_seconds;
        const bool pass = outcome.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("[%s] %s %s: %s (%.3f s, budget %.0f s)\n", pass ? "PASS" : "FAIL", criterion.id.c_str(),
                    criterion.title.c_str(), outcome.detail.c_str(), seconds, criterion.budget_seconds);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
