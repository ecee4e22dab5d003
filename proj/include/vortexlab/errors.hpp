#pragma once

#include <stdexcept>
#include <string>

namespace vortex {

// Invalid argument or out-of-domain quantum numbers.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Request outside what an implementation supports (caps, missing closed forms).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature or Monte Carlo failed to reach the requested tolerance.
struct NumericError : std::runtime_error {
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

// Malformed run configuration; `field` is the dotted key path.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& field_path, const std::string& what)
        : std::runtime_error(field_path + ": " + what), field(field_path) {}
    std::string field;
};

}  // namespace vortex
