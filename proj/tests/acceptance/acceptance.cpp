// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "opburgers/coefficients.hpp"
#include "opburgers/errors.hpp"
#include "opburgers/format.hpp"
#include "opburgers/frac.hpp"
#include "opburgers/invariant.hpp"
#include "opburgers/kernels.hpp"
#include "opburgers/numdiff.hpp"
#include "opburgers/residual.hpp"
#include "opburgers/sampling.hpp"
#include "opburgers/specialfn.hpp"
#include "opburgers/transform.hpp"

using namespace opburgers;
using format::number;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

// Generalized Hermite identities by Richardson differences at step 1e-5.
Outcome hermite_identities() {
    Outcome out;
    const double step = 1e-5;
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
        for (int i = 0; i <= 20; ++i) {
            const double f = -2.0 + 0.2 * i;
            for (int j = 0; j <= 10; ++j) {
                const double h = 0.2 * j;
                const auto H = [n](double ff, double hh) { return specialfn::hermite_gen({n, ff, hh}); };
                const double d_h = numdiff::richardson([&](double s) { return H(f, s); }, h, step);
                const double d_f = numdiff::richardson([&](double s) { return H(s, h); }, f, step);
                const double exact_h = n >= 2 ? n * (n - 1) * specialfn::hermite_gen({n - 2, f, h}) : 0.0;
                const double exact_f = n >= 1 ? n * specialfn::hermite_gen({n - 1, f, h}) : 0.0;
                worst = std::max(worst, std::abs(d_h - exact_h) / std::max(1.0, std::abs(exact_h)));
                worst = std::max(worst, std::abs(d_f - exact_f) / std::max(1.0, std::abs(exact_f)));
            }
        }
    }
    out.require(worst <= 1e-8, "deviation " + number(worst));
    out.detail = out.pass ? "max scaled deviation " + number(worst) + " <= 1e-8" : out.detail;
    return out;
}

// Mittag-Leffler eigenfunctions of the L1 Caputo-type operator.
Outcome mittag_leffler_orders() {
    Outcome out;
    const std::vector<int> nodes{512, 1024, 2048, 4096};
    const std::vector<double> times{0.5, 1.0, 1.5, 2.0};
    double lo_seen = INFINITY, hi_seen = -INFINITY;
    for (const double beta : {0.4, 0.6, 0.8}) {
        for (const double C : {0.8, -0.8}) {
            for (const char* clock : {"t", "log1p"}) {
                const frac::FracParams p{beta, frac::clock_by_name(clock)};
                std::vector<double> hs, errors;
                for (const int n : nodes) {
                    hs.push_back(1.0 / n);
                    errors.push_back(frac::eigen_check(p, C, times, n));
                }
                const double order = residual::fit_order(hs, errors);
                lo_seen = std::min(lo_seen, order - (2 - beta));
                hi_seen = std::max(hi_seen, order - (2 - beta));
                const bool ok = order >= 2 - beta - 0.3 && order <= 2 - beta + 0.5;
                out.require(ok, "beta=" + number(beta) + " C=" + number(C) + " f=" + clock + " order " + number(order));
            }
        }
    }
    if (out.pass) {
        out.detail = "order - (2-beta) in [" + number(lo_seen) + ", " + number(hi_seen) + "] over 12 cases";
    }
    return out;
}

// Residual sweeps of the catalog's exact solutions and perturbed controls.
Outcome exact_solution_residuals() {
    Outcome out;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"euclid-classic", "invariant"}, {"euclid-frac", "invariant"}, {"hyp-sinh", "hermite-2"},
        {"hyp-sinh", "hermite-3"},       {"hyp-sinh", "invariant"},    {"hyp-csch", "hermite-2"},
        {"hyp-csch", "hermite-3"},       {"hyp-frac", "invariant"},    {"hyp-2d", "invariant"},
        {"schwarzschild", "invariant"},  {"cigar", "invariant"},
    };
    std::string orders;
    for (const auto& [id, name] : cases) {
        const Scenario sc = find_scenario(id);
        const Candidate& cand = sc.candidate(name);
        const bool small = sc.dims() > 2;
        auto grid = residual::GridSpec::for_scenario(sc, std::vector<int>(sc.dims(), small ? 4 : 8), small ? 4 : 8,
                                                     0.05, cand.region);
        double lo = 1.8, hi = INFINITY;
        if (sc.time_op.is_fractional()) {
            grid.frac_nodes = 512;
            grid.step_fraction = 1e-3;
            lo = 2 - sc.time_op.frac.beta - 0.3;
            hi = 2 - sc.time_op.frac.beta + 0.5;
        } else {
            grid.step_fraction = 0.02;
        }
        const auto exact = residual::convergence_sweep(sc, cand.u, grid, 4);
        const auto control = residual::convergence_sweep(sc, residual::perturbed(cand.u, 0.1), grid, 4);
        const std::string tag = id + "/" + name;
        out.require(exact.order >= lo && exact.order <= hi, tag + " order " + number(exact.order));
        out.require(exact.monotone(), tag + " not monotone");
        out.require(control.order < 0.5, tag + " control order " + number(control.order));
        orders += (orders.empty() ? "" : " ") + number(std::round(exact.order * 100) / 100);
    }
    if (out.pass) out.detail = "11 solutions, orders " + orders + "; controls < 0.5";
    return out;
}

// Exponential transform in both directions on the line.
Outcome cole_hopf_bridge() {
    Outcome out;
    const Scenario sc = find_scenario("euclid-classic");
    const auto ctx = transform::context_for(sc);
    const Candidate& cand = sc.candidate("invariant");

    const ScalarField psi = transform::backward_field(ctx, cand.u);
    const auto grid = sampling::tensor_grid({sc.axes[0].range.shrunk(0.01)}, sc.time_range.shrunk(0.01), {50}, 50);
    double companion = 0.0;
    for (const auto& s : grid) companion = std::max(companion, std::abs(transform::companion_residual(ctx, psi, s.x, s.t)));
    out.require(companion < 1e-4, "companion residual " + number(companion));

    double forward_worst = 0.0;
    for (const int n : {2, 3}) {
        const ScalarField heat = [n](std::span<const double> x, double t) {
            return specialfn::hermite_gen({n, x[0], t});
        };
        const std::optional<Box> region = n == 3 ? std::optional<Box>(Box{{0.2, 1.0}}) : std::nullopt;
        auto g = residual::GridSpec::for_scenario(sc, {20}, 20, 0.05, region);
        const auto report = residual::evaluate(sc, transform::forward_field(ctx, heat), g);
        forward_worst = std::max(forward_worst, report.max_abs);
    }
    out.require(forward_worst < 1e-4, "forward residual " + number(forward_worst));

    const auto samples = sampling::halton({sc.axes[0].range.shrunk(0.02)}, sc.time_range, 50, 2);
    const double roundtrip = transform::roundtrip_check(ctx, cand.u, samples);
    out.require(roundtrip < 1e-5, "roundtrip " + number(roundtrip));
    if (out.pass) {
        out.detail = "companion " + number(companion) + ", forward " + number(forward_worst) + ", roundtrip " +
                     number(roundtrip);
    }
    return out;
}

// Riccati closed form against fourth-order integration of the 2x2 system.
Outcome coefficient_oracle() {
    Outcome out;
    const Scenario sc = find_scenario("euclid-classic");
    const auto sys = invariant::build_coeff_system(sc);
    const auto b = coefficients::riccati(0.1, -1.0);
    const auto traj = invariant::integrate_coeff_system(sys, {b(0.0), b(0.0)}, 0.0, 2.0, 2000);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        for (const double v : traj.b[i]) worst = std::max(worst, std::abs(v - b(traj.t[i])));
    }
    out.require(worst <= 1e-7, "deviation " + number(worst));
    if (out.pass) out.detail = "max deviation " + number(worst) + " on [0, 2]";
    return out;
}

// Operator hypotheses and their broken controls.
Outcome hypothesis_checkers() {
    Outcome out;
    const ScalarField u = [](std::span<const double> x, double t) {
        double s = 0.1 * t;
        for (std::size_t i = 0; i < x.size(); ++i) s += std::sin(0.7 * x[i] + 0.3 * static_cast<double>(i));
        return s;
    };
    const ScalarField v = [](std::span<const double> x, double t) {
        double p = 1.0 + 0.1 * t;
        for (const double w : x) p *= 1.0 + 0.2 * w * w;
        return p;
    };
    double leibniz = 0.0, commutator = 0.0;
    for (const auto& sc : catalog()) {
        const auto samples = sampling::halton(shrunk(sc.box(), 0.05), sc.time_range.shrunk(0.05), 16, 3);
        const bool classical = !sc.time_op.is_fractional();
        for (std::size_t d = 0; d < sc.dims(); ++d) {
            const double h = 1e-3 * sc.axes[d].range.extent();
            for (const SpatialOp* op : {&sc.terms[d].N, &sc.terms[d].M}) {
                leibniz = std::max(leibniz, operators::check_leibniz(*op, u, v, samples, h));
                if (classical) {
                    commutator = std::max(commutator, operators::check_commutator(sc.time_op, *op, u, samples, h,
                                                                                 1e-3 * sc.time_range.extent()));
                }
            }
        }
    }
    out.require(leibniz < 1e-5, "leibniz " + number(leibniz));
    out.require(commutator < 1e-5, "commutator " + number(commutator));

    const Scenario mixed = find_scenario("hyp-mixed");
    const auto& term = mixed.terms[0];
    const auto samples = sampling::halton(mixed.box(), mixed.time_range, 16, 4);
    const double factor = operators::check_factorization(term.M, term.L, term.N, u, samples, 1e-4);
    out.require(factor < 1e-8, "factorization " + number(factor));

    std::vector<double> times;
    for (int i = 0; i < 20; ++i) times.push_back(0.1 * (i + 1));
    const double riccati = operators::check_A_ode(TimeOp::classical(), coefficients::inverse_shift(-1.0), times);
    out.require(riccati < 1e-6, "A identity " + number(riccati));

    // Broken controls must be flagged by the same checkers.
    const GenericOp shifted = [](const ScalarField& w, std::span<const double> x, double t) {
        return numdiff::partial(w, x, t, 0, 1e-4) + w(x, t);
    };
    const auto line = sampling::halton({{-1.0, 1.0}}, {0.1, 2.0}, 16, 5);
    const double leibniz_bad = operators::check_leibniz(shifted, u, v, line);
    const Scenario cigar = find_scenario("cigar");
    const auto cigar_samples = sampling::halton(shrunk(cigar.box(), 0.05), cigar.time_range, 16, 6);
    const double commutator_bad =
        operators::check_commutator(TimeOp::classical(), cigar.terms[0].N, u, cigar_samples, 1e-3, 1e-3);
    const double factor_bad =
        operators::check_factorization(term.M, LinearMult::identity(), term.N, u, samples, 1e-4);
    const double riccati_bad =
        operators::check_A_ode(TimeOp::classical(), [](double) { return 0.7; }, times);
    out.require(leibniz_bad > 1e-2, "leibniz control missed");
    out.require(commutator_bad > 1e-2, "commutator control missed");
    out.require(factor_bad > 1e-2, "factorization control missed");
    out.require(riccati_bad > 1e-2, "A identity control missed");
    if (out.pass) {
        out.detail = "leibniz " + number(leibniz) + ", commutator " + number(commutator) + ", factorization " +
                     number(factor) + ", A identity " + number(riccati) + "; 4 controls flagged";
    }
    return out;
}

// Hyperbolic heat kernel and the Burgers solution derived from it.
Outcome brownian_kernel() {
    Outcome out;
    const double h = 1e-3;
    const auto phi = [](double e, double s) { return kernels::hyperbolic_heat_density({e, s}); };
    const Box box{{0.5, 2.5}};
    const Interval time{0.5, 2.0};
    double heat = 0.0;
    for (const auto& p : sampling::tensor_grid(box, time, {8}, 5)) {
        const double eta = p.x[0], t = p.t;
        const double phi_t = numdiff::richardson([&](double s) { return phi(eta, s); }, t, h);
        const auto flux = [&](double e) {
            return std::sinh(e) * numdiff::richardson([&](double y) { return phi(y, t); }, e, h);
        };
        const double lap = numdiff::richardson(flux, eta, h) / std::sinh(eta);
        heat = std::max(heat, std::abs(phi_t - lap) / std::max(std::abs(phi_t), 1e-12));
    }
    out.require(heat < 1e-3, "heat residual " + number(heat));

    // Relative to the largest term of the equation at each point.
    const Scenario sc = find_scenario("hyp-mixed");
    residual::GridSpec grid;
    grid.box = box;
    grid.time = time;
    grid.nodes = {8};
    grid.time_nodes = 5;
    grid.step_fraction = 5e-3;
    const ScalarField& u = sc.candidate("brownian").u;
    double burgers = 0.0;
    for (const auto& p : sampling::tensor_grid(box, time, {8}, 5)) {
        const auto terms = residual::evaluate_point(sc, u, p.x, p.t, grid);
        burgers = std::max(burgers, std::abs(terms.residual) / terms.scale());
    }
    out.require(burgers < 1e-2, "burgers residual " + number(burgers));

    bool positive = true, decreasing = true;
    for (int j = 0; j < 16; ++j) {
        const double t = time.lo + time.extent() * j / 15;
        double previous = INFINITY;
        for (int i = 0; i <= 40; ++i) {
            const double value = phi(box[0].lo + box[0].extent() * i / 40, t);
            positive = positive && value > 0.0;
            decreasing = decreasing && value < previous;
            previous = value;
        }
    }
    out.require(positive, "density not positive");
    out.require(decreasing, "density not decreasing in eta");
    if (out.pass) {
        out.detail = "heat " + number(heat) + ", burgers " + number(burgers) + ", positive and decreasing";
    }
    return out;
}

// Mittag-Leffler coefficients in the bracket reproduce the target.
Outcome constraint_identities() {
    Outcome out;
    std::string detail;
    for (const auto& [id, m] : std::vector<std::pair<std::string, int>>{
             {"euclid-frac", 1}, {"hyp-frac", 1}, {"hyp-2d", 2}, {"cigar", 2}, {"schwarzschild", 4}}) {
        const Scenario sc = find_scenario(id);
        const auto spec = invariant::solve_constraint(sc, sc.coefficients.target, 20);
        out.require(static_cast<int>(spec.A.size()) == m, id + " has " + std::to_string(spec.A.size()) + " axes");
        out.require(spec.max_deviation <= 1e-9, id + " deviation " + number(spec.max_deviation));
        detail += (detail.empty() ? "" : ", ") + id + " " + number(spec.max_deviation);
    }
    if (out.pass) out.detail = detail;
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Hermite identities", 1.0, hermite_identities},
        {2, "Mittag-Leffler eigenfunction orders", 30.0, mittag_leffler_orders},
        {3, "exact-solution residuals", 300.0, exact_solution_residuals},
        {4, "exponential transform bridge", 30.0, cole_hopf_bridge},
        {5, "coefficient ODE oracle", 1.0, coefficient_oracle},
        {6, "hypothesis checkers", 10.0, hypothesis_checkers},
        {7, "hyperbolic Brownian kernel", 120.0, brownian_kernel},
        {8, "constraint identities", 1.0, constraint_identities},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("error: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) outcome.require(false, "runtime over " + number(c.budget_seconds) + " s");
        std::printf("criterion %d %s: %s (%s; %.2f s)\n", c.id, c.name.c_str(), outcome.pass ? "PASS" : "FAIL",
                    outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
