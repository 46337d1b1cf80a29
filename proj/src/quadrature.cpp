#include "opburgers/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "opburgers/compensated.hpp"
#include "opburgers/errors.hpp"

namespace opburgers::quadrature {

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    const int n = intervals + (intervals % 2);
    const double h = (b - a) / n;
    CompensatedSum sum;
    sum.add(f(a));
    sum.add(f(b));
    for (int i = 1; i < n; ++i) {
        sum.add((i % 2 ? 4.0 : 2.0) * f(a + i * h));
    }
    return sum.value() * h / 3.0;
}

namespace {

// Kronrod 15-point abscissae and weights with embedded Gauss 7-point weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double gauss = fc * kWg[3];
    double kronrod = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace

Result gauss_kronrod(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol, int max_intervals) {
    std::priority_queue<Segment> work;
    const Segment first = kronrod15(f, a, b);
    work.push(first);
    double total = first.value;
    double total_error = first.error;
    int count = 1;
    while (total_error > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (count >= max_intervals) {
            throw AccuracyError("adaptive quadrature: subdivision cap reached", total_error);
        }
        const Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = kronrod15(f, worst.a, mid);
        const Segment right = kronrod15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++count;
    }
    // Re-sum in interval order so the value does not depend on the
    // floating-point drift of the incremental updates.
    std::vector<Segment> segments;
    segments.reserve(work.size());
    while (!work.empty()) {
        segments.push_back(work.top());
        work.pop();
    }
    std::sort(segments.begin(), segments.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
    CompensatedSum value;
    CompensatedSum error;
    for (const auto& s : segments) {
        value.add(s.value);
        error.add(s.error);
    }
    return {value.value(), error.value(), count};
}

}  // namespace opburgers::quadrature
