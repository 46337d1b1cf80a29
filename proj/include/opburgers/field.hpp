#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace opburgers {

/// Spatial coordinates of one evaluation point.
using Point = std::vector<double>;

/// Real-valued field of spatial coordinates and time. Solutions, operator
/// coefficients, generators and metric components all share this shape.
using ScalarField = std::function<double(std::span<const double> x, double t)>;

/// Function of time only (A(t), λ(t), coefficient functions b(t)).
using TimeFunction = std::function<double(double)>;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double extent() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
    /// Interval shrunk by `fraction` of its extent on both sides.
    Interval shrunk(double fraction) const {
        const double d = fraction * extent();
        return {lo + d, hi - d};
    }
};

using Box = std::vector<Interval>;

inline Box shrunk(const Box& box, double fraction) {
    Box out;
    out.reserve(box.size());
    for (const auto& r : box) out.push_back(r.shrunk(fraction));
    return out;
}

/// A spatial point together with a time.
struct Sample {
    Point x;
    double t = 0.0;
};

inline ScalarField constant_field(double value) {
    return [value](std::span<const double>, double) { return value; };
}

/// Field that depends on a single coordinate only.
template <class F>
ScalarField axis_field(std::size_t axis, F f) {
    return [axis, f](std::span<const double> x, double) { return f(x[axis]); };
}

}  // namespace opburgers
