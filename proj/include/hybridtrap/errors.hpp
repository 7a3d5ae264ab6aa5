#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hybridtrap {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A config or spec field failed validation. `field_path` is the dotted key
// (e.g. "sphere.density_kg_m3") so the CLI can point at the offending line.
class ValidationError : public Error {
public:
    ValidationError(std::string field_path, const std::string& msg)
        : Error(field_path + ": " + msg), field_path_(std::move(field_path)) {}
    const std::string& field_path() const { return field_path_; }

private:
    std::string field_path_;
};

// The integrator produced a non-finite state.
class IntegrationDivergedError : public Error {
public:
    IntegrationDivergedError(std::uint64_t step, double time)
        : Error("integration diverged at step " + std::to_string(step) +
                " (t = " + std::to_string(time) + " s)"),
          step_(step), time_(time) {}
    std::uint64_t step() const { return step_; }
    double time() const { return time_; }

private:
    std::uint64_t step_;
    double time_;
};

// Linearization requested at a point that is not a trapping well
// (curvature of the optical potential not positive there).
class NotAWellError : public Error {
public:
    using Error::Error;
};

// Two-bath temperature balance with both rates zero.
class UndefinedEquilibriumError : public Error {
public:
    using Error::Error;
};

// Requested detector sample rate cannot represent the expected signal band.
class AliasingError : public Error {
public:
    using Error::Error;
};

// A fit or peak-tracking operation had too few usable points.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Observed secular frequency lies below the floor implied by the inferred
// photon number; no non-negative charge reproduces it.
class InconsistentObservationError : public Error {
public:
    using Error::Error;
};

}
