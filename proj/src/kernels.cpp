#include "opburgers/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "opburgers/errors.hpp"
#include "opburgers/numdiff.hpp"
#include "opburgers/quadrature.hpp"

namespace opburgers::kernels {

namespace {

void check_point(const KernelPoint& p) {
    if (!(p.eta > 0.0) || !(p.t > 0.0)) {
        throw DomainError("kernel needs eta > 0 and t > 0, got eta=" + std::to_string(p.eta) +
                          " t=" + std::to_string(p.t));
    }
}

// q / sinh q, continuous through q = 0.
double q_over_sinh(double q) { return q < 1e-8 ? 1.0 - q * q / 6.0 : q / std::sinh(q); }

}  // namespace

double hyperbolic_heat_density(const KernelPoint& p, double rel_tol) {
    check_point(p);
    if (!(rel_tol > 1e-12 && rel_tol < 1e-3)) throw ParameterError("kernel rel_tol must lie in (1e-12, 1e-3)");
    const double eta = p.eta;
    const double t = p.t;
    // ψ = η + v²; with q = v²/2, cosh ψ − cosh η = 2 sinh(η + q) sinh q, so
    // the integrand 2ψ e^{−ψ²/4t} √(q / (sinh q · sinh(η + q))) is smooth at v = 0.
    const auto integrand = [&](double v) {
        const double q = 0.5 * v * v;
        const double psi = eta + v * v;
        return 2.0 * psi * std::exp(-psi * psi / (4.0 * t)) * std::sqrt(q_over_sinh(q) / std::sinh(eta + q));
    };
    // Upper limit ψ_max = η + 8√(2t) + 5.
    const double v_max = std::sqrt(8.0 * std::sqrt(2.0 * t) + 5.0);
    const auto result = quadrature::gauss_kronrod(integrand, 0.0, v_max, 0.0, rel_tol, 4000);
    const double prefactor = std::exp(-t / 4.0) / (std::sqrt(std::numbers::pi) * std::pow(2.0 * t, 1.5));
    return prefactor * result.value;
}

double brownian_burgers_solution(const KernelPoint& p, double t0, double step, double rel_tol) {
    check_point(p);
    if (p.t == t0) throw DomainError("brownian solution is undefined at t = t0");
    if (!(step > 0.0) || step >= p.eta) throw ParameterError("step must lie in (0, eta)");
    const auto log_density = [&](double eta) { return std::log(hyperbolic_heat_density({eta, p.t}, rel_tol)); };
    return (p.t - t0) * std::sinh(p.eta) * numdiff::richardson(log_density, p.eta, step);
}

ScalarField density_field(double rel_tol) {
    return [rel_tol](std::span<const double> x, double t) { return hyperbolic_heat_density({x[0], t}, rel_tol); };
}

ScalarField brownian_solution_field(double t0, double step, double rel_tol) {
    return [t0, step, rel_tol](std::span<const double> x, double t) {
        return brownian_burgers_solution({x[0], t}, t0, step, rel_tol);
    };
}

}  // namespace opburgers::kernels
