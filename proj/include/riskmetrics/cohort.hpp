#pragma once

#include "riskmetrics/measures.hpp"

#include <cstdint>

namespace riskmetrics {

/// 2x2 exposure-by-disease table of a finite cohort.
struct CohortCounts {
    std::uint64_t exposed_case = 0;
    std::uint64_t exposed_control = 0;
    std::uint64_t unexposed_case = 0;
    std::uint64_t unexposed_control = 0;

    std::uint64_t exposed() const noexcept { return exposed_case + exposed_control; }
    std::uint64_t unexposed() const noexcept { return unexposed_case + unexposed_control; }
    std::uint64_t cases() const noexcept { return exposed_case + unexposed_case; }
    std::uint64_t controls() const noexcept { return exposed_control + unexposed_control; }
    std::uint64_t total() const noexcept { return exposed() + unexposed(); }

    friend bool operator==(const CohortCounts &, const CohortCounts &) = default;
};

struct SimulationSpec {
    PopulationParams params;
    std::uint64_t n_subjects = 1;
    std::uint64_t seed = 0;
};

/// Plug-in frequencies of a cohort.
struct PlugInEstimates {
    double f = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
    double rr = 0.0;
};

/// Draws n_subjects independent subjects: exposure with probability f, then
/// disease with probability p1 if exposed, p0 otherwise.
///
/// The generator is std::mt19937_64 seeded with `seed`. Each draw takes one
/// 64-bit output x and forms u = (x >> 11) * 2^-53 in [0, 1); the event
/// happens when u < p. Exposure is drawn before disease for every subject.
/// The engine output is fixed by the C++ standard, so counts are identical
/// across platforms for the same spec.
CohortCounts simulate_cohort(const SimulationSpec &spec);

/// Pairwise c-statistic over all case/control pairs with ties scored 0.5,
/// computed from the four counts. Throws DegenerateScenario without at least
/// one case and one control. Exact against explicit pair enumeration while
/// the number of pairs stays below 2^52.
double empirical_c(const CohortCounts &counts);

/// Throws DegenerateScenario when exposed, unexposed or unexposed cases are
/// zero (p0 or rr undefined).
PlugInEstimates plug_in_estimates(const CohortCounts &counts);

/// The measures formulas evaluated at plug-in frequencies. The c_index field
/// equals empirical_c(counts) up to rounding.
DerivedMeasures empirical_measures(const CohortCounts &counts);

} // namespace riskmetrics
