#include "opburgers/scenarios.hpp"

#include <cmath>
#include <memory>

#include "opburgers/coefficients.hpp"
#include "opburgers/errors.hpp"
#include "opburgers/kernels.hpp"
#include "opburgers/numdiff.hpp"
#include "opburgers/specialfn.hpp"

namespace opburgers {

Box Scenario::box() const {
    Box out;
    for (const auto& a : axes) out.push_back(a.range);
    return out;
}

bool Scenario::has_generators() const {
    for (const auto& t : terms) {
        if (!t.generators.empty()) return true;
    }
    return false;
}

const Candidate& Scenario::candidate(const std::string& name) const {
    for (const auto& c : candidates) {
        if (c.name == name) return c;
    }
    throw ParameterError("scenario '" + id + "' has no candidate '" + name + "'");
}

double Scenario::A_sum(double t) const {
    double sum = 0.0;
    for (const auto& term : terms) sum += term.A(t);
    return sum;
}

namespace {

using specialfn::hermite_gen;

ScalarField one() { return constant_field(1.0); }

SpatialOp op_on(std::size_t axis, ScalarField coeff, std::string label) {
    return {std::move(coeff), axis, std::move(label)};
}

// Coefficient that depends only on its own coordinate.
template <class F>
SpatialOp op_1d(std::size_t axis, F f, std::string label) {
    return op_on(axis, axis_field(axis, f), std::move(label));
}

double ln_tanh_half(double eta) { return std::log(std::tanh(0.5 * eta)); }

Generator unit(std::string label, ScalarField f) { return {std::move(label), std::move(f), GeneratorTag::Unit}; }
Generator kernel_constant() { return {"1", one(), GeneratorTag::Kernel}; }

// u = (t − t0)·n·H_{n−1}(f, t)/H_n(f, t) with the heat polynomial companion H_n(f, t).
Candidate hermite_candidate(int n, std::function<double(double)> f, double t0, std::string label) {
    Candidate c;
    c.name = "hermite-" + std::to_string(n);
    c.description = "(t-t0) n H_{n-1}(" + label + ", t)/H_n(" + label + ", t)";
    c.u = [n, f, t0](std::span<const double> x, double t) {
        const double fv = f(x[0]);
        return (t - t0) * n * hermite_gen({n - 1, fv, t}) / hermite_gen({n, fv, t});
    };
    c.companion = [n, f](std::span<const double> x, double t) { return hermite_gen({n, f(x[0]), t}); };
    return c;
}

// Equal-coefficient invariant solution b(t)(ω + 1) and its companion
// exp(k(ω + 1)²/2)/√(1 − 2c(t − t0)), k = c/(1 − 2c(t − t0)).
Candidate riccati_candidate(std::function<double(double)> omega, double c, double t0, std::string label) {
    Candidate cand;
    cand.name = "invariant";
    cand.description = "b(t) (" + label + " + 1), b = c(t-t0)/(1-2c(t-t0))";
    const TimeFunction b = coefficients::riccati(c, t0);
    cand.u = [b, omega](std::span<const double> x, double t) { return b(t) * (omega(x[0]) + 1.0); };
    cand.companion = [omega, c, t0](std::span<const double> x, double t) {
        const double d = 1.0 - 2.0 * c * (t - t0);
        const double w = omega(x[0]) + 1.0;
        return std::exp(0.5 * (c / d) * w * w) / std::sqrt(d);
    };
    return cand;
}

// E_β(C f(t)^β) (Σ unit generators + number of axes).
Candidate mittag_candidate(const Scenario& sc, double beta, const frac::Clock& clock, double C,
                           std::string description) {
    const TimeFunction E = coefficients::mittag(beta, clock, C);
    std::vector<ScalarField> units;
    for (const auto& term : sc.terms) {
        for (const auto& g : term.generators) {
            if (g.tag == GeneratorTag::Unit) units.push_back(g.field);
        }
    }
    const double constant = static_cast<double>(sc.terms.size());
    Candidate cand;
    cand.name = "invariant";
    cand.description = std::move(description);
    cand.u = [E, units, constant](std::span<const double> x, double t) {
        double spatial = constant;
        for (const auto& w : units) spatial += w(x, t);
        return E(t) * spatial;
    };
    return cand;
}

Scenario euclid_classic(const CatalogOptions& o) {
    Scenario sc;
    sc.id = "euclid-classic";
    sc.equation = "3.20";
    sc.title = "Burgers equation on the line with A(t) = 1/(t - t0)";
    sc.axes = {{"x", {-1.0, 1.0}}};
    sc.time_range = {0.1, 2.0};
    sc.time_op = TimeOp::classical();
    sc.form = Form::B;
    sc.t0 = o.t0;
    AxisTerms x;
    x.N = op_on(0, one(), "d_x");
    x.M = op_on(0, one(), "d_x");
    x.A = coefficients::inverse_shift(o.t0);
    x.generators = {unit("x", axis_field(0, [](double v) { return v; })), kernel_constant()};
    x.eigenvalue = 1.0;
    sc.terms = {x};
    sc.coefficients = {CoefficientModel::Kind::Riccati, o.c, o.t0, 0.0};
    sc.params = {{"c", o.c}, {"t0", o.t0}};
    const auto identity = [](double v) { return v; };
    sc.candidates.push_back(riccati_candidate(identity, o.c, o.t0, "x"));
    sc.candidates.push_back(hermite_candidate(2, identity, o.t0, "x"));
    Candidate h3 = hermite_candidate(3, identity, o.t0, "x");
    h3.region = Box{{0.2, 1.0}};  // H_3(x, t) vanishes at x = 0
    sc.candidates.push_back(h3);
    return sc;
}

Scenario euclid_frac(const CatalogOptions& o) {
    const frac::Clock clock = frac::clock_by_name(o.clock);
    Scenario sc;
    sc.id = "euclid-frac";
    sc.equation = "3.12";
    sc.title = "Fractional Burgers equation on the line";
    sc.axes = {{"x", {-1.0, 1.0}}};
    sc.time_range = {0.1, 2.0};
    sc.time_op = TimeOp::fractional({o.beta, clock});
    sc.form = Form::A;
    sc.t0 = o.t0;
    AxisTerms x;
    x.N = op_on(0, one(), "d_x");
    x.M = op_on(0, one(), "d_x");
    x.A = coefficients::split_coefficient(o.beta, clock, o.C, 1, 1.0);
    x.generators = {unit("x", axis_field(0, [](double v) { return v; })), kernel_constant()};
    x.eigenvalue = 1.0;
    sc.terms = {x};
    sc.coefficients = {CoefficientModel::Kind::Mittag, 0.0, 0.0, o.C};
    sc.params = {{"beta", o.beta}, {"C", o.C}};
    sc.candidates.push_back(mittag_candidate(sc, o.beta, clock, o.C, "E(C f^beta) (x + 1)"));
    return sc;
}

Scenario hyp_sinh(const CatalogOptions& o) {
    Scenario sc;
    sc.id = "hyp-sinh";
    sc.equation = "2.18";
    sc.title = "Hyperbolic half-plane, N = M = sinh(eta) d_eta";
    sc.axes = {{"eta", {0.2, 3.0}}};
    sc.time_range = {0.1, 2.0};
    sc.time_op = TimeOp::classical();
    sc.form = Form::B;
    sc.t0 = o.t0;
    AxisTerms e;
    e.N = op_1d(0, [](double v) { return std::sinh(v); }, "sinh(eta) d_eta");
    e.M = e.N;
    e.A = coefficients::inverse_shift(o.t0);
    e.generators = {unit("ln tanh(eta/2)", axis_field(0, ln_tanh_half)), kernel_constant()};
    e.eigenvalue = 1.0;
    sc.terms = {e};
    sc.coefficients = {CoefficientModel::Kind::Riccati, o.c, o.t0, 0.0};
    sc.params = {{"c", o.c}, {"t0", o.t0}};
    sc.candidates.push_back(hermite_candidate(2, ln_tanh_half, o.t0, "ln tanh(eta/2)"));
    sc.candidates.push_back(hermite_candidate(3, ln_tanh_half, o.t0, "ln tanh(eta/2)"));
    sc.candidates.push_back(riccati_candidate(ln_tanh_half, o.c, o.t0, "ln tanh(eta/2)"));
    return sc;
}

Scenario hyp_csch(const CatalogOptions& o) {
    Scenario sc;
    sc.id = "hyp-csch";
    sc.equation = "2.21";
    sc.title = "Hyperbolic half-plane, N = M = (1/sinh(eta)) d_eta";
    sc.axes = {{"eta", {0.2, 3.0}}};
    sc.time_range = {0.1, 2.0};
    sc.time_op = TimeOp::classical();
    sc.form = Form::B;
    sc.t0 = o.t0;
    AxisTerms e;
    e.N = op_1d(0, [](double v) { return 1.0 / std::sinh(v); }, "csch(eta) d_eta");
    e.M = e.N;
    e.A = coefficients::inverse_shift(o.t0);
    const auto cosh_fn = [](double v) { return std::cosh(v); };
    e.generators = {unit("cosh(eta)", axis_field(0, cosh_fn)), kernel_constant()};
    e.eigenvalue = 1.0;
    sc.terms = {e};
    sc.coefficients = {CoefficientModel::Kind::Riccati, o.c, o.t0, 0.0};
    sc.params = {{"c", o.c}, {"t0", o.t0}};
    sc.candidates.push_back(hermite_candidate(2, cosh_fn, o.t0, "cosh(eta)"));
    sc.candidates.push_back(hermite_candidate(3, cosh_fn, o.t0, "cosh(eta)"));
    sc.candidates.push_back(riccati_candidate(cosh_fn, o.c, o.t0, "cosh(eta)"));
    return sc;
}

// Polar hyperbolic metric diag(1, sinh²η) over (η, α).
std::vector<ScalarField> hyperbolic_metric() {
    return {one(), axis_field(0, [](double e) { return std::sinh(e) * std::sinh(e); })};
}

Scenario hyp_mixed(const CatalogOptions& o) {
    Scenario sc;
    sc.id = "hyp-mixed";
    sc.equation = "2.23";
    sc.title = "Hyperbolic half-plane with L = csch(eta)^2, form (b)";
    sc.axes = {{"eta", {0.5, 2.5}}};
    sc.time_range = {0.5, 2.0};
    sc.time_op = TimeOp::classical();
    sc.form = Form::B;
    sc.t0 = o.t0;
    AxisTerms e;
    e.N = op_1d(0, [](double v) { return std::sinh(v); }, "sinh(eta) d_eta");
    e.M = op_1d(0, [](double v) { return 1.0 / std::sinh(v); }, "csch(eta) d_eta");
    e.L = {axis_field(0, [](double v) { return 1.0 / (std::sinh(v) * std::sinh(v)); }), "csch(eta)^2"};
    e.A = coefficients::inverse_shift(o.t0);
    sc.terms = {e};
    sc.params = {{"t0", o.t0}};
    Candidate brownian;
    brownian.name = "brownian";
    brownian.description = "(t-t0) sinh(eta) d_eta ln phi, phi the hyperbolic heat kernel";
    brownian.u = kernels::brownian_solution_field(o.t0);
    brownian.companion = kernels::density_field();
    brownian.quadrature_based = true;
    sc.candidates.push_back(brownian);
    sc.metric = MetricLink{hyperbolic_metric(), {0}, true, "M N is the radial hyperbolic Laplacian"};
    return sc;
}

Scenario hyp_frac(const CatalogOptions& o) {
    const frac::Clock clock = frac::clock_by_name(o.clock);
    Scenario sc;
    sc.id = "hyp-frac";
    sc.equation = "3.14";
    sc.title = "Fractional equation on the hyperbolic half-plane, N = M = sinh(eta) d_eta";
    sc.axes = {{"eta", {0.2, 3.0}}};
    sc.time_range = {0.1, 2.0};
    sc.time_op = TimeOp::fractional({o.beta, clock});
    sc.form = Form::A;
    sc.t0 = o.t0;
    AxisTerms e;
    e.N = op_1d(0, [](double v) { return std::sinh(v); }, "sinh(eta) d_eta");
    e.M = e.N;
    e.A = coefficients::split_coefficient(o.beta, clock, o.C, 1, 1.0);
    e.generators = {unit("ln tanh(eta/2)", axis_field(0, ln_tanh_half)), kernel_constant()};
    e.eigenvalue = 1.0;
    sc.terms = {e};
    sc.coefficients = {CoefficientModel::Kind::Mittag, 0.0, 0.0, o.C};
    sc.params = {{"beta", o.beta}, {"C", o.C}};
    sc.candidates.push_back(mittag_candidate(sc, o.beta, clock, o.C, "E(C f^beta) (ln tanh(eta/2) + 1)"));

    Scenario remark = sc;
    remark.id = "hyp-frac-laplacian";
    remark.equation = "3.16";
    remark.title = "Same equation with N = (1/sinh(eta)) d_eta, so N M is the hyperbolic Laplacian";
    remark.terms[0].N = op_1d(0, [](double v) { return 1.0 / std::sinh(v); }, "csch(eta) d_eta");
    remark.metric = MetricLink{hyperbolic_metric(), {0}, false, "N M is the radial hyperbolic Laplacian"};
    sc.variants.push_back(remark);
    return sc;
}

Scenario hyp_2d(const CatalogOptions& o) {
    const frac::Clock clock = frac::clock_by_name(o.clock);
    Scenario sc;
    sc.id = "hyp-2d";
    sc.equation = "4.13";
    sc.title = "Full hyperbolic Laplacian in polar coordinates (eta, alpha)";
    sc.axes = {{"eta", {0.2, 3.0}}, {"alpha", {-1.0, 1.0}}};
    sc.time_range = {0.1, 2.0};
    sc.time_op = TimeOp::fractional({o.beta, clock});
    sc.form = Form::A;
    sc.t0 = o.t0;
    const TimeFunction A = coefficients::split_coefficient(o.beta, clock, o.C, 2, 1.0);
    AxisTerms e;
    e.M = op_1d(0, [](double v) { return std::sinh(v); }, "sinh(eta) d_eta");
    e.N = op_1d(0, [](double v) { return 1.0 / std::sinh(v); }, "csch(eta) d_eta");
    e.A = A;
    e.generators = {unit("ln tanh(eta/2)", axis_field(0, ln_tanh_half)), kernel_constant()};
    e.eigenvalue = 1.0;
    AxisTerms a;
    a.M = op_on(1, one(), "d_alpha");
    a.N = op_on(1, axis_field(0, [](double v) { return 1.0 / (std::sinh(v) * std::sinh(v)); }),
                "csch(eta)^2 d_alpha");
    a.A = A;
    a.generators = {unit("alpha", axis_field(1, [](double v) { return v; })), kernel_constant()};
    a.eigenvalue = 1.0;
    sc.terms = {e, a};
    sc.coefficients = {CoefficientModel::Kind::Mittag, 0.0, 0.0, o.C};
    sc.params = {{"beta", o.beta}, {"A", o.C}};
    sc.candidates.push_back(mittag_candidate(sc, o.beta, clock, o.C, "E(A f^beta) (ln tanh(eta/2) + alpha + 2)"));
    sc.metric = MetricLink{hyperbolic_metric(), {0, 1}, false, "hyperbolic plane, ds^2 = deta^2 + sinh^2(eta) dalpha^2"};
    return sc;
}

Scenario schwarzschild(const CatalogOptions& o) {
    const frac::Clock clock = frac::clock_by_name(o.clock);
    constexpr double G = 1.0;
    constexpr double mass = 1.0;
    constexpr double c = 1.0;
    const double two_gm = 2.0 * G * mass;
    const double c2 = c * c;
    Scenario sc;
    sc.id = "schwarzschild";
    sc.equation = "4.25";
    sc.title = "Schwarzschild spacetime (t, r, theta, phi), evolution variable tau";
    sc.axes = {{"t", {-1.0, 1.0}}, {"r", {0.2, 1.8}}, {"theta", {0.3, 2.8}}, {"phi", {0.0, 6.28}}};
    sc.time_name = "tau";
    sc.time_range = {0.1, 1.0};
    sc.time_op = TimeOp::fractional({o.beta, clock});
    sc.form = Form::A;
    sc.t0 = o.t0;
    const TimeFunction A = coefficients::split_coefficient(o.beta, clock, o.C, 4, 1.0);
    const auto r_of = [](std::span<const double> x) { return x[1]; };

    AxisTerms t;
    t.M = op_on(0, one(), "d_t");
    t.N = op_on(0, [=](std::span<const double> x, double) { return r_of(x) / (c2 * r_of(x) - two_gm); },
                "r/(c^2 r - 2GM) d_t");
    t.A = A;
    t.generators = {unit("t", axis_field(0, [](double v) { return v; })), kernel_constant()};
    t.eigenvalue = 1.0;

    AxisTerms r;
    r.M = op_1d(1, [=](double v) { return (two_gm - c2 * v) * v; }, "(2GM - c^2 r) r d_r");
    r.N = op_1d(1, [=](double v) { return 1.0 / (c2 * v * v); }, "1/(c r)^2 d_r");
    r.A = A;
    r.generators = {unit("ln(r/(2GM - c^2 r))/(2GM)",
                         axis_field(1, [=](double v) { return std::log(v / (two_gm - c2 * v)) / two_gm; })),
                    kernel_constant()};
    r.eigenvalue = 1.0;

    AxisTerms th;
    th.M = op_1d(2, [](double v) { return std::sin(v); }, "sin(theta) d_theta");
    th.N = op_on(2, [](std::span<const double> x, double) { return -1.0 / (x[1] * x[1] * std::sin(x[2])); },
                 "-1/(r^2 sin(theta)) d_theta");
    th.A = A;
    th.generators = {unit("ln tan(theta/2)", axis_field(2, [](double v) { return std::log(std::tan(0.5 * v)); })),
                     kernel_constant()};
    th.eigenvalue = 1.0;

    AxisTerms ph;
    ph.M = op_on(3, one(), "d_phi");
    ph.N = op_on(3,
                 [](std::span<const double> x, double) {
                     const double s = x[1] * std::sin(x[2]);
                     return -1.0 / (s * s);
                 },
                 "-1/(r sin(theta))^2 d_phi");
    ph.A = A;
    ph.generators = {unit("phi", axis_field(3, [](double v) { return v; })), kernel_constant()};
    ph.eigenvalue = 1.0;

    sc.terms = {t, r, th, ph};
    sc.coefficients = {CoefficientModel::Kind::Mittag, 0.0, 0.0, o.C};
    sc.params = {{"beta", o.beta}, {"A", o.C}, {"G", G}, {"M", mass}, {"c", c}};
    sc.candidates.push_back(mittag_candidate(
        sc, o.beta, clock, o.C, "E(A f(tau)^beta) (t + ln(r/(2GM - c^2 r))/(2GM) + ln tan(theta/2) + phi + 4)"));

    std::vector<ScalarField> g = {
        [=](std::span<const double> x, double) { return (1.0 - two_gm / (c2 * x[1])) * c2; },
        [=](std::span<const double> x, double) { return -1.0 / (1.0 - two_gm / (c2 * x[1])); },
        [](std::span<const double> x, double) { return -x[1] * x[1]; },
        [](std::span<const double> x, double) {
            const double s = x[1] * std::sin(x[2]);
            return -s * s;
        }};
    sc.metric = MetricLink{g, {0, 1, 2, 3}, false, "Schwarzschild metric, signature (+,-,-,-)"};
    return sc;
}

Scenario cigar(const CatalogOptions& o) {
    const frac::Clock clock = frac::clock_by_name(o.clock);
    Scenario sc;
    sc.id = "cigar";
    sc.equation = "4.32";
    sc.title = "Cigar soliton metric (dx^2 + dy^2)/(e^{4t} + x^2 + y^2)";
    sc.axes = {{"x", {-1.0, 1.0}}, {"y", {-1.0, 1.0}}};
    sc.time_range = {0.1, 1.0};
    sc.time_op = TimeOp::fractional({o.beta, clock});
    sc.form = Form::A;
    sc.t0 = o.t0;
    const TimeFunction A = coefficients::split_coefficient(o.beta, clock, o.C, 2, 1.0);
    const ScalarField factor = [](std::span<const double> x, double t) {
        return std::exp(4.0 * t) + x[0] * x[0] + x[1] * x[1];
    };
    AxisTerms x;
    x.M = op_on(0, one(), "d_x");
    x.N = op_on(0, factor, "(e^{4t} + x^2 + y^2) d_x");
    x.A = A;
    x.generators = {unit("x", axis_field(0, [](double v) { return v; })), kernel_constant()};
    x.eigenvalue = 1.0;
    AxisTerms y;
    y.M = op_on(1, one(), "d_y");
    y.N = op_on(1, factor, "(e^{4t} + x^2 + y^2) d_y");
    y.A = A;
    y.generators = {unit("y", axis_field(1, [](double v) { return v; })), kernel_constant()};
    y.eigenvalue = 1.0;
    sc.terms = {x, y};
    sc.coefficients = {CoefficientModel::Kind::Mittag, 0.0, 0.0, o.C};
    sc.params = {{"beta", o.beta}, {"A", o.C}};
    sc.candidates.push_back(mittag_candidate(sc, o.beta, clock, o.C, "E(A f(t)^beta) (x + y + 2)"));
    const ScalarField g = [factor](std::span<const double> p, double t) { return 1.0 / factor(p, t); };
    sc.metric = MetricLink{{g, g}, {0, 1}, false, "conformally flat; time enters the metric and is frozen per point"};
    return sc;
}

}  // namespace

std::vector<Scenario> catalog(const CatalogOptions& options) {
    return {euclid_classic(options), euclid_frac(options), hyp_sinh(options),
            hyp_csch(options),       hyp_mixed(options),   hyp_frac(options),
            hyp_2d(options),         schwarzschild(options), cigar(options)};
}

Scenario find_scenario(const std::string& id, const CatalogOptions& options) {
    for (auto& sc : catalog(options)) {
        if (sc.id == id) return sc;
        for (auto& v : sc.variants) {
            if (v.id == id) return v;
        }
    }
    throw ParameterError("unknown scenario '" + id + "'");
}

namespace geometry {

namespace {

void check_metric(const std::vector<ScalarField>& g_diag, std::span<const double> x, double t) {
    for (std::size_t d = 0; d < g_diag.size(); ++d) {
        const double g = g_diag[d](x, t);
        if (!std::isfinite(g) || g == 0.0) {
            throw SingularMetricError("metric component " + std::to_string(d) + " is singular at the point");
        }
    }
}

}  // namespace

double sqrt_abs_det(const std::vector<ScalarField>& g_diag, std::span<const double> x, double t) {
    check_metric(g_diag, x, t);
    double det = 1.0;
    for (const auto& g : g_diag) det *= g(x, t);
    return std::sqrt(std::abs(det));
}

double beltrami_from_metric(const std::vector<ScalarField>& g_diag, std::span<const double> x, double t,
                            const ScalarField& u, std::span<const double> steps) {
    if (steps.size() != g_diag.size()) throw ParameterError("one step per metric coordinate is required");
    check_metric(g_diag, x, t);
    const double volume = sqrt_abs_det(g_diag, x, t);
    Point y(x.begin(), x.end());
    double total = 0.0;
    for (std::size_t d = 0; d < g_diag.size(); ++d) {
        const double h = steps[d];
        const auto flux = [&](double s) {
            Point z = y;
            z[d] = s;
            const double weight = sqrt_abs_det(g_diag, z, t) / g_diag[d](z, t);
            return weight * numdiff::partial(u, z, t, d, h);
        };
        total += numdiff::richardson(flux, x[d], h);
    }
    return total / volume;
}

double factored_operator(const Scenario& sc, const ScalarField& u, std::span<const double> x, double t,
                         std::span<const double> steps, bool companion_order) {
    double total = 0.0;
    for (std::size_t d = 0; d < sc.terms.size(); ++d) {
        const SpatialOp& inner = companion_order ? sc.terms[d].N : sc.terms[d].M;
        const SpatialOp& outer = companion_order ? sc.terms[d].M : sc.terms[d].N;
        const double h = steps[inner.axis];
        total += operators::apply_spatial(outer, operators::applied(inner, u, h), x, t, steps[outer.axis]);
    }
    return total;
}

double metric_consistency(const Scenario& sc, const std::vector<ScalarField>& fields,
                          const std::vector<Sample>& samples, std::span<const double> steps) {
    if (!sc.metric) throw UnsupportedError("scenario '" + sc.id + "' has no metric link");
    const MetricLink& link = *sc.metric;
    const std::size_t metric_dims = link.g_diag.size();
    std::vector<double> metric_steps(metric_dims, steps[0]);
    for (std::size_t d = 0; d < link.axis_map.size(); ++d) metric_steps[link.axis_map[d]] = steps[d];

    double worst = 0.0;
    for (const auto& field : fields) {
        // Lift the field to metric coordinates.
        const ScalarField lifted = [&](std::span<const double> m, double t) {
            Point p(link.axis_map.size());
            for (std::size_t d = 0; d < p.size(); ++d) p[d] = m[link.axis_map[d]];
            return field(p, t);
        };
        for (const auto& s : samples) {
            Point m(metric_dims, 0.0);
            for (std::size_t d = 0; d < link.axis_map.size(); ++d) m[link.axis_map[d]] = s.x[d];
            const double reference = beltrami_from_metric(link.g_diag, m, s.t, lifted, metric_steps);
            const double factored = factored_operator(sc, field, s.x, s.t, steps, link.companion_order);
            worst = std::max(worst, std::abs(reference - factored));
        }
    }
    return worst;
}

}  // namespace geometry
}  // namespace opburgers
