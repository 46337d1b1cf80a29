#include "opburgers/frac.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "opburgers/compensated.hpp"
#include "opburgers/errors.hpp"
#include "opburgers/numdiff.hpp"
#include "opburgers/specialfn.hpp"

namespace opburgers::frac {

namespace {

constexpr int kMonotoneSamples = 64;

}  // namespace

double Clock::invert(double s, double t_hi) const {
    if (inverse) return inverse(s);
    double lo = 0.0;
    double hi = t_hi;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < s ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Clock identity_clock() {
    return {"t", [](double t) { return t; }, [](double) { return 1.0; }, [](double s) { return s; }};
}

Clock log1p_clock() {
    return {"log1p", [](double t) { return std::log1p(t); }, [](double t) { return 1.0 / (1.0 + t); },
            [](double s) { return std::expm1(s); }};
}

Clock clock_by_name(const std::string& name) {
    if (name == "t") return identity_clock();
    if (name == "log1p") return log1p_clock();
    throw ParameterError("unknown clock '" + name + "' (expected t or log1p)");
}

void FracParams::validate(double t_max) const {
    if (!(beta > 0.0 && beta <= 1.0)) throw ParameterError("fractional order must lie in (0, 1]");
    if (!clock.f || !clock.fprime) throw ParameterError("clock needs f and f'");
    if (std::abs(clock.f(0.0)) > 1e-12) throw ParameterError("clock must satisfy f(0) = 0");
    double previous = clock.f(0.0);
    for (int i = 1; i <= kMonotoneSamples; ++i) {
        const double t = t_max * i / kMonotoneSamples;
        const double value = clock.f(t);
        if (!(value > previous)) {
            throw ParameterError("clock is not strictly increasing near t = " + std::to_string(t));
        }
        if (!(clock.fprime(t) > 0.0)) {
            throw ParameterError("clock derivative is not positive at t = " + std::to_string(t));
        }
        previous = value;
    }
}

double caputo_f(const FracParams& p, const TimeFunction& b, double t, int nodes) {
    if (!(t > 0.0)) throw DomainError("fractional derivative needs t > 0, got " + std::to_string(t));
    if (nodes < 8) throw ParameterError("fractional derivative needs at least 8 nodes");
    if (!(p.beta > 0.0 && p.beta <= 1.0)) throw ParameterError("fractional order must lie in (0, 1]");

    if (p.beta == 1.0) {
        const double h = 1e-3 * t;
        return numdiff::richardson(b, t, h) / p.clock.fprime(t);
    }

    // Monotonicity of f on a uniform τ grid; the s-grid below relies on it.
    double previous_s = p.clock.f(0.0);
    for (int j = 1; j <= nodes; ++j) {
        const double tau = t * j / nodes;
        const double s = p.clock.f(tau);
        if (!(s > previous_s)) {
            throw ParameterError("clock is not strictly increasing near t = " + std::to_string(tau));
        }
        previous_s = s;
    }

    const double s_end = p.clock.f(t);
    const double ds = s_end / nodes;
    std::vector<double> values(nodes + 1);
    values[0] = b(0.0);
    for (int j = 1; j < nodes; ++j) values[j] = b(p.clock.invert(j * ds, t));
    values[nodes] = b(t);

    // Weight for the cell k steps behind the evaluation point:
    // (k+1)^(1−β) − k^(1−β), scaled by 1/(Δs^β Γ(2−β)).
    const double one_minus = 1.0 - p.beta;
    CompensatedSum sum;
    for (int j = 0; j < nodes; ++j) {
        const double k = static_cast<double>(nodes - 1 - j);
        const double weight = std::pow(k + 1.0, one_minus) - std::pow(k, one_minus);
        sum.add((values[j + 1] - values[j]) * weight);
    }
    return sum.value() / (std::pow(ds, p.beta) * specialfn::gamma(2.0 - p.beta));
}

double eigen_check(const FracParams& p, double C, std::span<const double> t_samples, int nodes) {
    const specialfn::MittagLeffler ml(p.beta);
    const auto eigenfunction = [&](double tau) { return ml(C * std::pow(p.clock.f(tau), p.beta)); };
    double worst = 0.0;
    for (const double t : t_samples) {
        const double lhs = caputo_f(p, eigenfunction, t, nodes);
        const double rhs = C * eigenfunction(t);
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    return worst;
}

}  // namespace opburgers::frac
