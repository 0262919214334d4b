#pragma once

#include <cstddef>
#include <optional>

namespace riskmetrics {

/// A population with a binary risk factor.
///
/// `f` is the prevalence of the risk factor, `p0` the disease incidence among
/// subjects without it and `rr` the relative risk of the exposed. The
/// constructor is the single validation site: 0 < f < 1, 0 < p0 < 1, rr > 0
/// and rr * p0 <= 1. Values on the closed boundary of the unit interval raise
/// DegenerateScenario; anything else out of range raises InvalidParams.
class PopulationParams {
public:
    PopulationParams(double f, double p0, double rr);

    double f() const noexcept { return f_; }
    double p0() const noexcept { return p0_; }
    double rr() const noexcept { return rr_; }

    /// Incidence among the exposed, rr * p0.
    double p1() const noexcept { return rr_ * p0_; }

    friend bool operator==(const PopulationParams &, const PopulationParams &) = default;

private:
    double f_;
    double p0_;
    double rr_;
};

/// Everything that follows from a PopulationParams.
///
/// For rr >= 1: 0 <= par < 1 and 0.5 <= c_index < 1. Protective factors
/// (rr < 1) yield par < 0 and c_index < 0.5.
struct DerivedMeasures {
    double p1 = 0.0;
    double f_cases = 0.0;
    double f_controls = 0.0;
    double par = 0.0;
    double c_index = 0.0;
};

struct SolverConfig {
    double abs_tolerance = 1e-10;
    int max_iterations = 200;
    /// Upper end of the rr bracket. Unset means the largest rr with rr * p0 <= 1.
    std::optional<double> rr_upper_bound;
};

struct SolveResult {
    double rr = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

double incidence_exposed(double p0, double rr);

/// f * p1 / (f * p1 + (1 - f) * p0). Throws DegenerateScenario when the
/// overall incidence is zero.
double prevalence_in_cases(double f, double p0, double p1);

/// f * (1 - p1) / (f * (1 - p1) + (1 - f) * (1 - p0)). Throws
/// DegenerateScenario when everyone is a case.
double prevalence_in_controls(double f, double p0, double p1);

/// Population-attributable risk f * (rr - 1) / (f * (rr - 1) + 1).
/// Negative for protective factors (rr < 1); nothing is clamped.
double par(double f, double rr);

/// The c-index as the tie-weighted sum over the three kinds of case/control
/// pairs, evaluated term by term without simplification.
double c_index_three_term(double f_cases, double f_controls);

/// 0.5 * (1 + f_cases - f_controls).
double c_index_closed(double f_cases, double f_controls);

DerivedMeasures derive_measures(const PopulationParams &params);

/// Convenience: c-index of the scenario (f, p0, rr).
double c_index(double f, double p0, double rr);

/// Inverts par() for rr. Requires 0 < f < 1 and 0 <= target_par < 1.
double rr_from_par(double f, double target_par);

/// Largest rr for which rr * p0 <= 1 holds in floating point.
double max_feasible_rr(double p0);

/// Bisection on rr over [1, upper] for the rr whose c-index equals target_c.
///
/// Iterates until the residual |c - target_c| is within abs_tolerance and
/// the bracket is narrower than abs_tolerance * max(1, rr). Throws
/// TargetUnreachable when target_c lies outside [c(1), c(upper)] and
/// NoConvergence when max_iterations is exhausted.
SolveResult solve_rr_for_target_c(double f, double p0, double target_c,
                                  const SolverConfig &cfg = {});

double rr_for_target_c(double f, double p0, double target_c, const SolverConfig &cfg = {});

} // namespace riskmetrics
