#pragma once

#include "opburgers/field.hpp"
#include "opburgers/frac.hpp"

namespace opburgers::coefficients {

/// b(t) = c(t − t0) / (1 − 2c(t − t0)), the equal-coefficient Riccati solution.
TimeFunction riccati(double c, double t0);

/// A(t) = 1/(t − t0).
TimeFunction inverse_shift(double t0);

/// b(t) = E_β(C·f(t)^β).
TimeFunction mittag(double beta, const frac::Clock& clock, double C);

/// Equal split of a constant bracket target over m axes:
/// A_d(t) = target / (m·(1 + 2λ·E_β(target·f(t)^β))).
TimeFunction split_coefficient(double beta, const frac::Clock& clock, double target, int m, double lambda);

}  // namespace opburgers::coefficients
