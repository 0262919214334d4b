#include "riskmetrics/cohort.hpp"

#include "riskmetrics/errors.hpp"

#include <random>

namespace riskmetrics {

namespace {

// 53 high bits of one engine output, scaled to [0, 1).
double unit_draw(std::mt19937_64 &engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double ratio(std::uint64_t num, std::uint64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

CohortCounts simulate_cohort(const SimulationSpec &spec) {
    if (spec.n_subjects < 1) {
        throw InvalidParams("n_subjects must be at least 1");
    }
    const double f = spec.params.f();
    const double p0 = spec.params.p0();
    const double p1 = spec.params.p1();

    std::mt19937_64 engine{spec.seed};
    CohortCounts counts;
    for (std::uint64_t i = 0; i < spec.n_subjects; ++i) {
        const bool exposed = unit_draw(engine) < f;
        const bool diseased = unit_draw(engine) < (exposed ? p1 : p0);
        if (exposed) {
            ++(diseased ? counts.exposed_case : counts.exposed_control);
        } else {
            ++(diseased ? counts.unexposed_case : counts.unexposed_control);
        }
    }
    return counts;
}

double empirical_c(const CohortCounts &counts) {
    if (counts.cases() == 0) {
        throw DegenerateScenario("cohort has no cases; the c-statistic is undefined");
    }
    if (counts.controls() == 0) {
        throw DegenerateScenario("cohort has no controls; the c-statistic is undefined");
    }
    const auto ec = static_cast<double>(counts.exposed_case);
    const auto ectrl = static_cast<double>(counts.exposed_control);
    const auto uc = static_cast<double>(counts.unexposed_case);
    const auto uctrl = static_cast<double>(counts.unexposed_control);

    // Twice the score: concordant pairs count 2, tied pairs 1, discordant 0.
    const double doubled_score = 2.0 * ec * uctrl + ec * ectrl + uc * uctrl;
    const double pairs = static_cast<double>(counts.cases()) * static_cast<double>(counts.controls());
    return doubled_score / (2.0 * pairs);
}

PlugInEstimates plug_in_estimates(const CohortCounts &counts) {
    if (counts.exposed() == 0 || counts.unexposed() == 0) {
        throw DegenerateScenario("cohort needs both exposed and unexposed subjects");
    }
    if (counts.unexposed_case == 0) {
        throw DegenerateScenario("cohort has no unexposed cases; p0 is zero and rr is undefined");
    }
    PlugInEstimates est;
    est.f = ratio(counts.exposed(), counts.total());
    est.p0 = ratio(counts.unexposed_case, counts.unexposed());
    est.p1 = ratio(counts.exposed_case, counts.exposed());
    est.rr = est.p1 / est.p0;
    return est;
}

DerivedMeasures empirical_measures(const CohortCounts &counts) {
    const PlugInEstimates est = plug_in_estimates(counts);
    if (counts.controls() == 0) {
        throw DegenerateScenario("cohort has no controls");
    }
    DerivedMeasures m;
    m.p1 = est.p1;
    m.f_cases = prevalence_in_cases(est.f, est.p0, est.p1);
    m.f_controls = prevalence_in_controls(est.f, est.p0, est.p1);
    m.par = par(est.f, est.rr);
    m.c_index = c_index_closed(m.f_cases, m.f_controls);
    return m;
}

} // namespace riskmetrics
