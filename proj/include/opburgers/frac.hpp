#pragma once

#include <span>
#include <string>

#include "opburgers/field.hpp"

namespace opburgers::frac {

/// Increasing time reparametrization s = f(t) with f(0) = 0. `inverse` may be
/// left empty, in which case f⁻¹ is found by bisection.
struct Clock {
    std::string name;
    TimeFunction f;
    TimeFunction fprime;
    TimeFunction inverse;

    double invert(double s, double t_hi) const;
};

Clock identity_clock();
Clock log1p_clock();
/// Look up a clock by name ("t" or "log1p").
Clock clock_by_name(const std::string& name);

struct FracParams {
    double beta = 0.5;  // order in (0, 1); 1 selects the classical limit
    Clock clock = identity_clock();

    /// Throws ParameterError unless β ∈ (0, 1], f(0) = 0, and f, f′ pass a
    /// sampled monotonicity check on [0, t_max].
    void validate(double t_max) const;
};

/// Caputo-type derivative (1/Γ(1−β)) ∫₀ᵗ (f(t)−f(τ))^(−β) b′(τ) dτ via the L1
/// scheme on a uniform grid of `nodes` cells in s = f(τ). β = 1 returns the
/// classical limit b′(t)/f′(t).
double caputo_f(const FracParams& p, const TimeFunction& b, double t, int nodes);

/// Max over samples of |D b − C·b| / (1 + |C·b|) for b = E_β(C f(t)^β).
double eigen_check(const FracParams& p, double C, std::span<const double> t_samples, int nodes);

}  // namespace opburgers::frac
