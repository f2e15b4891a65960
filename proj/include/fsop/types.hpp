#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace fsop {

// Working precision for pointwise evaluation. Coefficient tables are built
// in arbitrary precision and rounded into this type.
using Real = long double;

using HpReal = boost::multiprecision::mpfr_float;

// Sets the default MPFR precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : saved_(HpReal::default_precision()) {
        HpReal::default_precision(digits10);
    }
    ~PrecisionGuard() { HpReal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const HpReal& v) { return v.convert_to<Real>(); }

// Error hierarchy. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class TableExhausted : public Error {
public:
    TableExhausted(int requested, int available)
        : Error("degree " + std::to_string(requested) + " exceeds table range " +
                std::to_string(available)),
          requested_(requested), available_(available) {}
    int requested() const noexcept { return requested_; }
    int available() const noexcept { return available_; }

private:
    int requested_;
    int available_;
};

class NumericError : public Error {
public:
    using Error::Error;
};

class SolverFailure : public NumericError {
public:
    SolverFailure(const std::string& what, double residual)
        : NumericError(what + " (final residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class OracleError : public NumericError {
public:
    using NumericError::NumericError;
};

class BracketingFailure : public NumericError {
public:
    BracketingFailure(const std::string& what, int found, int expected, int grid_points)
        : NumericError(what + ": found " + std::to_string(found) + " of " +
                       std::to_string(expected) + " sign changes on a " +
                       std::to_string(grid_points) + "-point grid"),
          found_(found), expected_(expected), grid_points_(grid_points) {}
    int found() const noexcept { return found_; }
    int expected() const noexcept { return expected_; }
    int grid_points() const noexcept { return grid_points_; }

private:
    int found_;
    int expected_;
    int grid_points_;
};

class DegenerateSystem : public NumericError {
public:
    using NumericError::NumericError;
};

class UnexpectedRegime : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace fsop
