#pragma once

#include <optional>
#include <span>
#include <vector>

#include "opburgers/operators.hpp"
#include "opburgers/scenarios.hpp"

namespace opburgers::transform {

/// Values of ψ with |ψ| below this are refused by `forward`.
inline constexpr double kLogGuard = 1e-8;

/// Exponential/logarithmic bridge between the linear companion equation and
/// the nonlinear form-B equation along one axis.
struct TransformContext {
    SpatialOp N;
    TimeFunction A;
    double x0 = 0.0;  // antiderivative anchor on N's axis
    int nodes = 400;  // Simpson intervals for N⁻¹
    double step = 1e-4;  // spatial difference step

    /// Time-only gauge factor for `backward`: exp(∫_{t_ref}^{t} A[M u + A u L u](x0, s) ds).
    /// Needs M and L; without them only the raw exponential is available.
    bool gauge = true;
    std::optional<SpatialOp> M;
    std::optional<LinearMult> L;
    double t_ref = 0.0;
    int time_nodes = 64;
};

/// Context for axis `axis` of a form-B scenario, anchored at the left end of
/// the axis range with the gauge referenced to the start of the time range.
TransformContext context_for(const Scenario& sc, std::size_t axis = 0);

/// u = (1/A(t))·N(ln ψ) at (x, t).
double forward(const TransformContext& ctx, const ScalarField& psi, std::span<const double> x, double t);

struct BackwardParts {
    double phase = 0.0;  // A(t)·N⁻¹u
    double gauge = 0.0;  // time-only exponent, 0 when the gauge is off
    double value = 0.0;  // exp(phase + gauge)
};

BackwardParts backward_parts(const TransformContext& ctx, const ScalarField& u, std::span<const double> x, double t);

/// ψ = exp(A(t)·N⁻¹u + gauge(t)).
double backward(const TransformContext& ctx, const ScalarField& u, std::span<const double> x, double t);

/// Gauge exponent at t (x supplies the coordinates off N's axis).
double gauge_phase(const TransformContext& ctx, const ScalarField& u, std::span<const double> x, double t);

ScalarField forward_field(TransformContext ctx, ScalarField psi);
ScalarField backward_field(TransformContext ctx, ScalarField u);

/// max |forward(backward(u)) − u| over the samples.
double roundtrip_check(const TransformContext& ctx, const ScalarField& u, const std::vector<Sample>& samples);

/// ψ_t − M(N ψ) at (x, t): the companion equation of the scenario's form-B
/// equation. Needs ctx.M.
double companion_residual(const TransformContext& ctx, const ScalarField& psi, std::span<const double> x, double t,
                          double time_step = 1e-4);

}  // namespace opburgers::transform
