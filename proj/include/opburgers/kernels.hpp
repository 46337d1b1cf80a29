#pragma once

#include "opburgers/field.hpp"

namespace opburgers::kernels {

struct KernelPoint {
    double eta = 1.0;  // geodesic radial distance, > 0
    double t = 1.0;    // time, > 0
};

/// Radial heat kernel of the hyperbolic plane,
/// e^{−t/4}/(√π (2t)^{3/2}) ∫_η^∞ ψ e^{−ψ²/4t} / √(cosh ψ − cosh η) dψ.
double hyperbolic_heat_density(const KernelPoint& p, double rel_tol = 1e-10);

/// u = (t − t0)·sinh η·∂_η ln φ with a Richardson difference at `step`.
double brownian_burgers_solution(const KernelPoint& p, double t0, double step = 1e-3, double rel_tol = 1e-10);

/// Field wrappers over coordinate 0 (η) and time.
ScalarField density_field(double rel_tol = 1e-10);
ScalarField brownian_solution_field(double t0, double step = 1e-3, double rel_tol = 1e-10);

}  // namespace opburgers::kernels
