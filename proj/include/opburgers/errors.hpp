#pragma once

#include <stdexcept>
#include <string>

#include "opburgers/field.hpp"

namespace opburgers {

/// Base of every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (Γ at x ≤ 0, t ≤ 0, singular A).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter set (non-increasing clock, β out of range, bad grid).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A series did not reach its termination threshold within the term cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double partial_sum, int terms)
        : Error(what), partial_sum_(partial_sum), terms_(terms) {}
    double partial_sum() const { return partial_sum_; }
    int terms() const { return terms_; }

private:
    double partial_sum_;
    int terms_;
};

/// Requested size exceeds a fixed table (factorials beyond 20!).
class CapError : public Error {
public:
    using Error::Error;
};

/// A finite-difference stencil left the domain box.
class StencilError : public Error {
public:
    StencilError(const std::string& what, Point point) : Error(what), point_(std::move(point)) {}
    const Point& point() const { return point_; }

private:
    Point point_;
};

/// An operator coefficient vanishes on an integration path.
class SingularPathError : public Error {
public:
    SingularPathError(const std::string& what, double location) : Error(what), location_(location) {}
    double location() const { return location_; }

private:
    double location_;
};

/// Logarithm of a non-positive (or guard-band small) value was requested.
class LogDomainError : public Error {
public:
    LogDomainError(const std::string& what, Point point, double time)
        : Error(what), point_(std::move(point)), time_(time) {}
    const Point& point() const { return point_; }
    double time() const { return time_; }

private:
    Point point_;
    double time_;
};

/// Operation not defined for the given configuration (fractional commutator,
/// time-varying eigenvalues in a constraint split, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not reach its tolerance.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double estimate) : Error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

/// Mismatched counts (coefficients vs generators).
class ArityError : public Error {
public:
    using Error::Error;
};

/// Coefficient integration hit a pole.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, double time) : Error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

/// Metric determinant or a diagonal component vanishes at the point.
class SingularMetricError : public Error {
public:
    using Error::Error;
};

/// Residual evaluation excluded too many grid points.
class EvaluationError : public Error {
public:
    using Error::Error;
};

}  // namespace opburgers
