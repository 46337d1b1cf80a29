#include "opburgers/transform.hpp"

#include <cmath>

#include "opburgers/errors.hpp"
#include "opburgers/numdiff.hpp"
#include "opburgers/quadrature.hpp"

namespace opburgers::transform {

namespace {

double checked_A(const TransformContext& ctx, double t) {
    const double a = ctx.A(t);
    if (a == 0.0 || !std::isfinite(a)) throw DomainError("transform needs A(t) finite and nonzero, t = " + std::to_string(t));
    return a;
}

}  // namespace

TransformContext context_for(const Scenario& sc, std::size_t axis) {
    if (sc.form != Form::B) throw UnsupportedError("the transform targets form-B equations; '" + sc.id + "' is form A");
    const AxisTerms& term = sc.terms.at(axis);
    TransformContext ctx;
    ctx.N = term.N;
    ctx.A = term.A;
    ctx.x0 = sc.axes[axis].range.lo;
    ctx.step = 1e-4 * sc.axes[axis].range.extent();
    ctx.M = term.M;
    ctx.L = term.L;
    ctx.t_ref = sc.time_range.lo;
    return ctx;
}

double forward(const TransformContext& ctx, const ScalarField& psi, std::span<const double> x, double t) {
    const double centre = psi(x, t);
    if (!(centre > kLogGuard)) {
        throw LogDomainError("forward transform needs psi > " + std::to_string(kLogGuard) + ", got " +
                                 std::to_string(centre),
                             Point(x.begin(), x.end()), t);
    }
    const ScalarField log_psi = [&psi](std::span<const double> y, double s) { return std::log(psi(y, s)); };
    const double value = operators::apply_spatial(ctx.N, log_psi, x, t, ctx.step) / checked_A(ctx, t);
    if (!std::isfinite(value)) {
        throw LogDomainError("psi changes sign inside the difference stencil", Point(x.begin(), x.end()), t);
    }
    return value;
}

double gauge_phase(const TransformContext& ctx, const ScalarField& u, std::span<const double> x, double t) {
    if (!ctx.gauge) return 0.0;
    if (!ctx.M || !ctx.L) throw ParameterError("gauge needs the M operator and L multiplier");
    Point anchor(x.begin(), x.end());
    anchor[ctx.N.axis] = ctx.x0;
    const auto integrand = [&](double s) {
        const double a = checked_A(ctx, s);
        const double mu = operators::apply_spatial(*ctx.M, u, anchor, s, ctx.step);
        const double v = u(anchor, s);
        return a * (mu + a * v * ctx.L->multiplier(anchor, s) * v);
    };
    if (t == ctx.t_ref) return 0.0;
    return quadrature::simpson(integrand, ctx.t_ref, t, ctx.time_nodes);
}

BackwardParts backward_parts(const TransformContext& ctx, const ScalarField& u, std::span<const double> x, double t) {
    BackwardParts parts;
    parts.phase = checked_A(ctx, t) * operators::inverse_spatial(ctx.N, u, x, ctx.x0, t, ctx.nodes);
    parts.gauge = gauge_phase(ctx, u, x, t);
    parts.value = std::exp(parts.phase + parts.gauge);
    return parts;
}

double backward(const TransformContext& ctx, const ScalarField& u, std::span<const double> x, double t) {
    return backward_parts(ctx, u, x, t).value;
}

ScalarField forward_field(TransformContext ctx, ScalarField psi) {
    return [ctx = std::move(ctx), psi = std::move(psi)](std::span<const double> x, double t) {
        return forward(ctx, psi, x, t);
    };
}

ScalarField backward_field(TransformContext ctx, ScalarField u) {
    return [ctx = std::move(ctx), u = std::move(u)](std::span<const double> x, double t) {
        return backward(ctx, u, x, t);
    };
}

double roundtrip_check(const TransformContext& ctx, const ScalarField& u, const std::vector<Sample>& samples) {
    const ScalarField psi = backward_field(ctx, u);
    double worst = 0.0;
    for (const auto& s : samples) worst = std::max(worst, std::abs(forward(ctx, psi, s.x, s.t) - u(s.x, s.t)));
    return worst;
}

double companion_residual(const TransformContext& ctx, const ScalarField& psi, std::span<const double> x, double t,
                          double time_step) {
    if (!ctx.M) throw ParameterError("companion residual needs the M operator");
    const ScalarField n_psi = operators::applied(ctx.N, psi, ctx.step);
    return numdiff::time_partial(psi, x, t, time_step) - operators::apply_spatial(*ctx.M, n_psi, x, t, ctx.step);
}

}  // namespace opburgers::transform
