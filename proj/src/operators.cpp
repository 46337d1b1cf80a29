#include "opburgers/operators.hpp"

#include <cmath>
#include <sstream>

#include "opburgers/compensated.hpp"
#include "opburgers/errors.hpp"
#include "opburgers/numdiff.hpp"

namespace opburgers {

std::string TimeOp::describe() const {
    if (!is_fractional()) return "classical";
    std::ostringstream out;
    out << "fractional(beta=" << frac.beta << ", clock=" << frac.clock.name << ")";
    return out.str();
}

namespace operators {

double apply_spatial(const SpatialOp& op, const ScalarField& u, std::span<const double> x, double t, double step,
                     const Box* domain) {
    if (domain != nullptr) {
        const Interval& range = (*domain)[op.axis];
        if (!range.contains(x[op.axis] - step) || !range.contains(x[op.axis] + step)) {
            Point offending(x.begin(), x.end());
            offending[op.axis] += range.contains(x[op.axis] - step) ? step : -step;
            throw StencilError("stencil leaves the domain along axis " + std::to_string(op.axis), offending);
        }
    }
    return op.coeff(x, t) * numdiff::partial(u, x, t, op.axis, step);
}

ScalarField applied(const SpatialOp& op, ScalarField u, double step) {
    return [op, u = std::move(u), step](std::span<const double> x, double t) {
        return apply_spatial(op, u, x, t, step);
    };
}

double inverse_spatial(const SpatialOp& op, const ScalarField& u, std::span<const double> x, double x0, double t,
                       int nodes) {
    if (nodes < 16) throw ParameterError("inverse_spatial needs at least 16 nodes");
    const std::size_t axis = op.axis;
    const double x1 = x[axis];
    if (x1 == x0) return 0.0;
    const int n = nodes + (nodes % 2);
    const double h = (x1 - x0) / n;
    Point y(x.begin(), x.end());
    double previous_coeff = 0.0;
    CompensatedSum sum;
    for (int i = 0; i <= n; ++i) {
        y[axis] = x0 + i * h;
        const double a = op.coeff(y, t);
        if (!std::isfinite(a) || a == 0.0 || (i > 0 && (a > 0.0) != (previous_coeff > 0.0))) {
            throw SingularPathError("operator coefficient vanishes on the integration path", y[axis]);
        }
        previous_coeff = a;
        const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum.add(weight * u(y, t) / a);
    }
    return sum.value() * h / 3.0;
}

double inverse_spatial(const SpatialOp& op, const ScalarField& u, double x0, double x, double t, int nodes) {
    Point point(op.axis + 1, 0.0);
    point[op.axis] = x;
    return inverse_spatial(op, u, point, x0, t, nodes);
}

GenericOp as_generic(const SpatialOp& op, double step) {
    return [op, step](const ScalarField& u, std::span<const double> x, double t) {
        return apply_spatial(op, u, x, t, step);
    };
}

double check_leibniz(const GenericOp& op, const ScalarField& u, const ScalarField& v,
                     const std::vector<Sample>& samples) {
    const ScalarField product = [&](std::span<const double> x, double t) { return u(x, t) * v(x, t); };
    double worst = 0.0;
    for (const auto& s : samples) {
        const double lhs = op(product, s.x, s.t);
        const double rhs = u(s.x, s.t) * op(v, s.x, s.t) + v(s.x, s.t) * op(u, s.x, s.t);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double check_leibniz(const SpatialOp& op, const ScalarField& u, const ScalarField& v,
                     const std::vector<Sample>& samples, double step) {
    return check_leibniz(as_generic(op, step), u, v, samples);
}

double check_commutator(const TimeOp& ot, const SpatialOp& op, const ScalarField& u,
                        const std::vector<Sample>& samples, double step, double time_step) {
    if (ot.is_fractional()) {
        throw UnsupportedError("commutator check is defined for the classical time derivative only");
    }
    const ScalarField op_u = applied(op, u, step);
    const ScalarField u_t = [&](std::span<const double> x, double t) {
        return numdiff::time_partial(u, x, t, time_step);
    };
    double worst = 0.0;
    for (const auto& s : samples) {
        const double lhs = numdiff::time_partial(op_u, s.x, s.t, time_step);
        const double rhs = apply_spatial(op, u_t, s.x, s.t, step);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double check_factorization(const SpatialOp& m, const LinearMult& l, const SpatialOp& n, const ScalarField& u,
                           const std::vector<Sample>& samples, double step) {
    double worst = 0.0;
    for (const auto& s : samples) {
        const double lhs = apply_spatial(m, u, s.x, s.t, step);
        const double rhs = l.multiplier(s.x, s.t) * apply_spatial(n, u, s.x, s.t, step);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double check_A_ode(const TimeOp& ot, const TimeFunction& A, std::span<const double> t_samples, double time_step,
                   int frac_nodes) {
    double worst = 0.0;
    for (const double t : t_samples) {
        const double value = A(t);
        if (!std::isfinite(value)) throw DomainError("A(t) is singular at t = " + std::to_string(t));
        const double derivative = ot.is_fractional() ? frac::caputo_f(ot.frac, A, t, frac_nodes)
                                                     : numdiff::richardson(A, t, time_step);
        worst = std::max(worst, std::abs(derivative + value * value));
    }
    return worst;
}

}  // namespace operators
}  // namespace opburgers
