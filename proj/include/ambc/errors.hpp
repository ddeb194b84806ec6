#pragma once

#include <stdexcept>
#include <string>

namespace ambc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (x <= 0 for Gamma, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Input for which the requested quantity is undefined (zero matrix, zero vector).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_residual, int iterations)
        : Error(what), last_residual_(last_residual), iterations_(iterations) {}

    double last_residual() const noexcept { return last_residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double last_residual_;
    int iterations_;
};

// Meijer G index class outside the supported set, or a parameter set whose
// left and right pole sequences cannot be separated by a vertical contour.
class UnsupportedClassError : public Error {
public:
    using Error::Error;
};

// Numerical integration finished but could not certify the requested accuracy.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& what, int line = 0, std::string field = {})
        : Error(what), line_(line), field_(std::move(field)) {}

    // 1-based line in the config file, 0 when not tied to a line.
    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

}  // namespace ambc
