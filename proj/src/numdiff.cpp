#include "opburgers/numdiff.hpp"

namespace opburgers::numdiff {

double partial(const ScalarField& u, std::span<const double> x, double t, std::size_t axis, double h) {
    Point y(x.begin(), x.end());
    const double x0 = y[axis];
    return richardson(
        [&](double s) {
            y[axis] = s;
            return u(y, t);
        },
        x0, h);
}

double time_partial(const ScalarField& u, std::span<const double> x, double t, double h) {
    return richardson([&](double s) { return u(x, s); }, t, h);
}

}  // namespace opburgers::numdiff
