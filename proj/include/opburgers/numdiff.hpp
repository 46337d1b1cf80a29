#pragma once

#include <span>
#include <vector>

#include "opburgers/field.hpp"

namespace opburgers::numdiff {

/// Second-order central difference of g at x with step h.
template <class G>
double central(G&& g, double x, double h) {
    return (g(x + h) - g(x - h)) / (2.0 * h);
}

/// Richardson combination of central differences at h and h/2; fourth order,
/// exact for polynomials of degree ≤ 4. Stencil reach is h.
template <class G>
double richardson(G&& g, double x, double h) {
    const double coarse = central(g, x, h);
    const double fine = central(g, x, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

/// Richardson derivative of u along one spatial axis at (x, t).
double partial(const ScalarField& u, std::span<const double> x, double t, std::size_t axis, double h);

/// Richardson derivative of u in time at (x, t).
double time_partial(const ScalarField& u, std::span<const double> x, double t, double h);

}  // namespace opburgers::numdiff
