#pragma once

#include <functional>

namespace opburgers::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int intervals = 0;
};

/// Composite Simpson rule on [a, b] with `intervals` cells (rounded up to even).
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

/// Globally adaptive Gauss–Kronrod (7/15) quadrature. Bisects the interval with
/// the largest error estimate until the total estimate drops below
/// max(abs_tol, rel_tol·|I|). Throws AccuracyError after `max_intervals`.
Result gauss_kronrod(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol, int max_intervals = 2000);

}  // namespace opburgers::quadrature
