#pragma once

#include <stdexcept>
#include <string>

namespace poissinr {

/// Invalid physical or campaign parameter (non-positive radius, eta <= 2, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a formula (r = 0, s <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A layout with no base station was handed to a per-UE computation.
class EmptyNetworkError : public std::runtime_error {
public:
    EmptyNetworkError() : std::runtime_error("layout contains no base station") {}
};

/// Quadrature or root finding failed to meet its tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Monte Carlo campaign produced no usable sample.
class CampaignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed scenario or CDF file.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace poissinr
