#include "opburgers/coefficients.hpp"

#include <cmath>
#include <memory>

#include "opburgers/specialfn.hpp"

namespace opburgers::coefficients {

TimeFunction riccati(double c, double t0) {
    return [c, t0](double t) {
        const double s = c * (t - t0);
        return s / (1.0 - 2.0 * s);
    };
}

TimeFunction inverse_shift(double t0) {
    return [t0](double t) { return 1.0 / (t - t0); };
}

TimeFunction mittag(double beta, const frac::Clock& clock, double C) {
    auto ml = std::make_shared<const specialfn::MittagLeffler>(beta);
    return [ml, beta, f = clock.f, C](double t) { return (*ml)(C * std::pow(f(t), beta)); };
}

TimeFunction split_coefficient(double beta, const frac::Clock& clock, double target, int m, double lambda) {
    const TimeFunction E = mittag(beta, clock, target);
    return [E, target, m, lambda](double t) { return target / (m * (1.0 + 2.0 * lambda * E(t))); };
}

}  // namespace opburgers::coefficients
