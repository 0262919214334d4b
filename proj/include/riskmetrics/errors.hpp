#pragma once

#include <stdexcept>
#include <string>

namespace riskmetrics {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs outside the admissible parameter space (e.g. rr * p0 > 1).
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Inputs for which a measure is undefined (no cases, no controls, boundary
/// prevalence or incidence).
class DegenerateScenario : public Error {
public:
    using Error::Error;
};

/// Requested c-index cannot be reached inside the admissible rr bracket.
class TargetUnreachable : public Error {
public:
    TargetUnreachable(const std::string &what, double c_low, double c_high)
        : Error(what), c_low_{c_low}, c_high_{c_high} {}

    double achievable_low() const noexcept { return c_low_; }
    double achievable_high() const noexcept { return c_high_; }

private:
    double c_low_;
    double c_high_;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class RenderError : public Error {
public:
    using Error::Error;
};

} // namespace riskmetrics
