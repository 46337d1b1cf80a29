#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opburgers/field.hpp"
#include "opburgers/frac.hpp"

namespace opburgers {

/// First-order operator a(x, t)·∂ along one axis.
struct SpatialOp {
    ScalarField coeff;
    std::size_t axis = 0;
    std::string label;
};

/// Pointwise multiplication operator; the identity when the multiplier is 1.
struct LinearMult {
    ScalarField multiplier;
    std::string label;

    static LinearMult identity() { return {constant_field(1.0), "I"}; }
};

/// Evolution operator in time: ∂_t or the Caputo-type operator.
struct TimeOp {
    enum class Kind { Classical, Fractional };
    Kind kind = Kind::Classical;
    frac::FracParams frac;  // meaningful for Kind::Fractional only

    static TimeOp classical() { return {}; }
    static TimeOp fractional(frac::FracParams p) { return {Kind::Fractional, std::move(p)}; }
    bool is_fractional() const { return kind == Kind::Fractional; }
    std::string describe() const;
};

/// Any linear map from a field to its value at (x, t). Used for operators that
/// are not of the a(x)∂ form, such as deliberately broken controls.
using GenericOp = std::function<double(const ScalarField& u, std::span<const double> x, double t)>;

namespace operators {

/// a(x, t) times the Richardson derivative of u along op.axis. With a domain
/// box, a stencil reaching outside it raises StencilError.
double apply_spatial(const SpatialOp& op, const ScalarField& u, std::span<const double> x, double t, double step,
                     const Box* domain = nullptr);

/// The field x ↦ op(u)(x).
ScalarField applied(const SpatialOp& op, ScalarField u, double step);

/// Antiderivative ∫_{x0}^{x[axis]} u/a along op.axis by composite Simpson with
/// the other coordinates of `x` held fixed.
double inverse_spatial(const SpatialOp& op, const ScalarField& u, std::span<const double> x, double x0, double t,
                       int nodes);

/// One-dimensional convenience form.
double inverse_spatial(const SpatialOp& op, const ScalarField& u, double x0, double x, double t, int nodes);

GenericOp as_generic(const SpatialOp& op, double step);

/// max |op(uv) − u·op(v) − v·op(u)| over the samples.
double check_leibniz(const GenericOp& op, const ScalarField& u, const ScalarField& v,
                     const std::vector<Sample>& samples);
double check_leibniz(const SpatialOp& op, const ScalarField& u, const ScalarField& v,
                     const std::vector<Sample>& samples, double step);

/// max |∂_t(op u) − op(∂_t u)|. Classical time only.
double check_commutator(const TimeOp& ot, const SpatialOp& op, const ScalarField& u,
                        const std::vector<Sample>& samples, double step, double time_step);

/// max |m(u) − l·n(u)|.
double check_factorization(const SpatialOp& m, const LinearMult& l, const SpatialOp& n, const ScalarField& u,
                           const std::vector<Sample>& samples, double step);

/// max |O_t A + A²| over the sample times.
double check_A_ode(const TimeOp& ot, const TimeFunction& A, std::span<const double> t_samples,
                   double time_step = 1e-4, int frac_nodes = 2048);

}  // namespace operators
}  // namespace opburgers
