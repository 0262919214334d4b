#include "riskmetrics/measures.hpp"

#include "riskmetrics/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace riskmetrics {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Closed unit interval, finite.
void require_probability(const char *name, double v) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw InvalidParams(std::string(name) + " = " + fmt(v) + " is not a probability in [0, 1]");
    }
}

// Open unit interval; the endpoints are degenerate rather than invalid.
void require_open_probability(const char *name, double v) {
    require_probability(name, v);
    if (v == 0.0 || v == 1.0) {
        throw DegenerateScenario(std::string(name) + " = " + fmt(v) +
                                 " lies on the boundary; 0 < " + name + " < 1 required");
    }
}

void require_positive(const char *name, double v) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw InvalidParams(std::string(name) + " = " + fmt(v) + " must be a positive finite number");
    }
}

void require_feasible(double p0, double rr) {
    if (rr * p0 > 1.0) {
        throw InvalidParams("exposed incidence rr * p0 = " + fmt(rr * p0) +
                            " exceeds 1; rr * p0 <= 1 required");
    }
}

} // namespace

PopulationParams::PopulationParams(double f, double p0, double rr) : f_{f}, p0_{p0}, rr_{rr} {
    require_open_probability("f", f);
    require_open_probability("p0", p0);
    require_positive("rr", rr);
    require_feasible(p0, rr);
}

double incidence_exposed(double p0, double rr) {
    require_probability("p0", p0);
    require_positive("rr", rr);
    require_feasible(p0, rr);
    return rr * p0;
}

double prevalence_in_cases(double f, double p0, double p1) {
    require_probability("f", f);
    require_probability("p0", p0);
    require_probability("p1", p1);
    const double exposed_cases = f * p1;
    const double incidence = exposed_cases + (1.0 - f) * p0;
    if (incidence <= 0.0) {
        throw DegenerateScenario("overall incidence is zero; there are no cases");
    }
    return exposed_cases / incidence;
}

double prevalence_in_controls(double f, double p0, double p1) {
    require_probability("f", f);
    require_probability("p0", p0);
    require_probability("p1", p1);
    const double exposed_controls = f * (1.0 - p1);
    const double controls = exposed_controls + (1.0 - f) * (1.0 - p0);
    if (controls <= 0.0) {
        throw DegenerateScenario("overall incidence is one; there are no controls");
    }
    return exposed_controls / controls;
}

double par(double f, double rr) {
    require_probability("f", f);
    if (!std::isfinite(rr) || rr < 0.0) {
        throw InvalidParams("rr = " + fmt(rr) + " must be a non-negative finite number");
    }
    const double excess = f * (rr - 1.0);
    const double denom = excess + 1.0;
    if (denom <= 0.0) {
        throw InvalidParams("f * (rr - 1) + 1 = " + fmt(denom) + " must be positive");
    }
    return excess / denom;
}

double c_index_three_term(double f_cases, double f_controls) {
    require_probability("f_cases", f_cases);
    require_probability("f_controls", f_controls);
    const double both_exposed = 0.5 * f_cases * f_controls;
    const double both_unexposed = 0.5 * (1.0 - f_cases) * (1.0 - f_controls);
    const double concordant = 1.0 * f_cases * (1.0 - f_controls);
    return both_exposed + both_unexposed + concordant;
}

double c_index_closed(double f_cases, double f_controls) {
    require_probability("f_cases", f_cases);
    require_probability("f_controls", f_controls);
    return 0.5 * (1.0 + f_cases - f_controls);
}

DerivedMeasures derive_measures(const PopulationParams &params) {
    DerivedMeasures m;
    m.p1 = incidence_exposed(params.p0(), params.rr());
    m.f_cases = prevalence_in_cases(params.f(), params.p0(), m.p1);
    m.f_controls = prevalence_in_controls(params.f(), params.p0(), m.p1);
    m.par = par(params.f(), params.rr());
    m.c_index = c_index_closed(m.f_cases, m.f_controls);
    return m;
}

double c_index(double f, double p0, double rr) {
    return derive_measures(PopulationParams{f, p0, rr}).c_index;
}

double rr_from_par(double f, double target_par) {
    require_open_probability("f", f);
    if (!std::isfinite(target_par) || target_par < 0.0 || target_par >= 1.0) {
        throw InvalidParams("target PAR = " + fmt(target_par) + " must lie in [0, 1)");
    }
    return 1.0 + target_par / (f * (1.0 - target_par));
}

double max_feasible_rr(double p0) {
    require_open_probability("p0", p0);
    double rr = 1.0 / p0;
    while (rr * p0 > 1.0) {
        rr = std::nextafter(rr, 0.0);
    }
    return rr;
}

SolveResult solve_rr_for_target_c(double f, double p0, double target_c, const SolverConfig &cfg) {
    if (!(cfg.abs_tolerance > 0.0) || cfg.max_iterations < 1) {
        throw InvalidParams("solver needs abs_tolerance > 0 and max_iterations >= 1");
    }
    // Validates f and p0 at the lower bracket end.
    PopulationParams lower{f, p0, 1.0};
    double hi = max_feasible_rr(p0);
    if (cfg.rr_upper_bound) {
        hi = *cfg.rr_upper_bound;
        if (!(hi > 1.0)) {
            throw InvalidParams("rr upper bound = " + fmt(hi) + " must exceed 1");
        }
        require_feasible(p0, hi);
    }
    if (!std::isfinite(target_c)) {
        throw InvalidParams("target c-index must be finite");
    }

    double lo = 1.0;
    const double c_lo = derive_measures(lower).c_index;
    const double c_hi = c_index(f, p0, hi);
    const double tol = cfg.abs_tolerance;
    if (target_c < c_lo - tol || target_c > c_hi + tol) {
        throw TargetUnreachable("target unreachable: c-index " + fmt(target_c) +
                                    " lies outside the achievable range [" + fmt(c_lo) + ", " +
                                    fmt(c_hi) + "] over rr in [1, " + fmt(hi) + "]",
                                c_lo, c_hi);
    }
    if (target_c == c_lo) {
        return {lo, 0.0, 0};
    }
    if (target_c == c_hi) {
        return {hi, 0.0, 0};
    }

    for (int it = 1; it <= cfg.max_iterations; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        const double c_mid = c_index(f, p0, mid);
        const double residual = std::abs(c_mid - target_c);
        if (residual <= tol && hi - lo <= tol * std::max(1.0, mid)) {
            return {mid, residual, it};
        }
        if (c_mid < target_c) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw NoConvergence("bisection did not converge within " + std::to_string(cfg.max_iterations) +
                        " iterations");
}

double rr_for_target_c(double f, double p0, double target_c, const SolverConfig &cfg) {
    return solve_rr_for_target_c(f, p0, target_c, cfg).rr;
}

} // namespace riskmetrics
