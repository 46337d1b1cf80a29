#include "opburgers/residual.hpp"

#include <cmath>
#include <ostream>

#include "opburgers/errors.hpp"
#include "opburgers/format.hpp"
#include "opburgers/frac.hpp"
#include "opburgers/numdiff.hpp"
#include "opburgers/sampling.hpp"

namespace opburgers::residual {

GridSpec GridSpec::for_scenario(const Scenario& sc, std::vector<int> nodes, int time_nodes, double margin,
                                const std::optional<Box>& region) {
    GridSpec g;
    g.box = shrunk(region ? *region : sc.box(), margin);
    g.time = sc.time_range.shrunk(margin);
    g.nodes = std::move(nodes);
    g.time_nodes = time_nodes;
    g.validate();
    return g;
}

void GridSpec::validate() const {
    if (nodes.size() != box.size()) throw ParameterError("grid needs one node count per axis");
    for (const int n : nodes) {
        if (n < 4) throw ParameterError("grid node counts must be at least 4");
    }
    if (time_nodes < 4) throw ParameterError("grid time nodes must be at least 4");
    if (!(step_fraction > 0.0 && step_fraction < 0.1)) throw ParameterError("step fraction must lie in (0, 0.1)");
}

double Terms::scale() const {
    double s = std::max({std::abs(time), std::abs(diffusion), std::abs(source)});
    for (const double v : nonlinear) s = std::max(s, std::abs(v));
    return s;
}

Terms evaluate_point(const Scenario& sc, const ScalarField& u, std::span<const double> x, double t,
                     const GridSpec& grid) {
    Terms terms;
    if (sc.time_op.is_fractional()) {
        const Point at(x.begin(), x.end());
        const TimeFunction slice = [&u, &at](double tau) { return u(at, tau); };
        terms.time = frac::caputo_f(sc.time_op.frac, slice, t, grid.frac_nodes);
    } else {
        terms.time = numdiff::time_partial(u, x, t, grid.step_fraction * sc.time_range.extent());
    }

    const double value = u(x, t);
    double A_total = 0.0;
    double diffusion = 0.0;
    for (std::size_t d = 0; d < sc.terms.size(); ++d) {
        const AxisTerms& term = sc.terms[d];
        const double h = grid.step_fraction * sc.axes[d].range.extent();
        const double a = term.A(t);
        A_total += a;
        const LinearMult& L = term.L;
        const ScalarField quadratic = [&u, &L](std::span<const double> y, double s) {
            const double v = u(y, s);
            return v * L.multiplier(y, s) * v;
        };
        const SpatialOp& X = sc.form == Form::A ? term.M : term.N;
        terms.nonlinear.push_back(-a * operators::apply_spatial(X, quadratic, x, t, h));
        diffusion += operators::apply_spatial(term.N, operators::applied(term.M, u, h), x, t, h);
    }
    terms.diffusion = -diffusion;
    terms.source = -A_total * value;

    double r = terms.time;
    for (const double v : terms.nonlinear) r += v;
    r += terms.diffusion;
    r += terms.source;
    terms.residual = r;
    return terms;
}

ResidualReport evaluate(const Scenario& sc, const ScalarField& u, const GridSpec& grid) {
    grid.validate();
    if (grid.box.size() != sc.dims()) throw ParameterError("grid dimension does not match the scenario");
    ResidualReport report;
    report.grid = grid;
    std::vector<std::string> names{"time"};
    for (const auto& axis : sc.axes) names.push_back("nonlinear[" + axis.name + "]");
    names.push_back("diffusion");
    names.push_back("source");
    std::vector<double> maxima(names.size(), 0.0);

    const auto samples = sampling::tensor_grid(grid.box, grid.time, grid.nodes, grid.time_nodes);
    double sum_sq = 0.0;
    double max_u = 0.0;
    for (const auto& s : samples) {
        Terms terms;
        double value = 0.0;
        try {
            terms = evaluate_point(sc, u, s.x, s.t, grid);
            value = u(s.x, s.t);
        } catch (const Error&) {
            ++report.excluded;
            continue;
        }
        if (!std::isfinite(terms.residual)) {
            ++report.excluded;
            continue;
        }
        ++report.evaluated;
        max_u = std::max(max_u, std::abs(value));
        report.max_abs = std::max(report.max_abs, std::abs(terms.residual));
        sum_sq += terms.residual * terms.residual;
        maxima[0] = std::max(maxima[0], std::abs(terms.time));
        for (std::size_t d = 0; d < terms.nonlinear.size(); ++d) {
            maxima[1 + d] = std::max(maxima[1 + d], std::abs(terms.nonlinear[d]));
        }
        maxima[names.size() - 2] = std::max(maxima[names.size() - 2], std::abs(terms.diffusion));
        maxima[names.size() - 1] = std::max(maxima[names.size() - 1], std::abs(terms.source));
        if (grid.keep_points) report.points.push_back({s, terms});
    }
    const int total = static_cast<int>(samples.size());
    if (report.excluded * 20 > total) {
        throw EvaluationError("residual evaluation excluded " + std::to_string(report.excluded) + " of " +
                              std::to_string(total) + " points");
    }
    report.l2 = report.evaluated > 0 ? std::sqrt(sum_sq / report.evaluated) : 0.0;
    report.normalization = std::max(1.0, max_u);
    for (std::size_t i = 0; i < names.size(); ++i) report.per_term.emplace_back(names[i], maxima[i]);
    return report;
}

void ResidualReport::write_points_csv(std::ostream& out, const Scenario& sc) const {
    for (const auto& axis : sc.axes) out << axis.name << ',';
    out << sc.time_name;
    for (const auto& [name, value] : per_term) out << ',' << name;
    out << ",residual\n";
    for (const auto& p : points) {
        for (const double v : p.at.x) out << format::number(v) << ',';
        out << format::number(p.at.t) << ',' << format::number(p.terms.time);
        for (const double v : p.terms.nonlinear) out << ',' << format::number(v);
        out << ',' << format::number(p.terms.diffusion) << ',' << format::number(p.terms.source) << ','
            << format::number(p.terms.residual) << '\n';
    }
}

bool Sweep::monotone() const {
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i].report.max_abs > 1.1 * levels[i - 1].report.max_abs) return false;
    }
    return true;
}

Sweep convergence_sweep(const Scenario& sc, const ScalarField& u, const GridSpec& base, int levels) {
    if (levels < 3) throw ParameterError("a convergence sweep needs at least 3 levels");
    Sweep sweep;
    std::vector<double> hs, errors;
    for (int k = 0; k < levels; ++k) {
        GridSpec g = base;
        double h;
        if (sc.time_op.is_fractional()) {
            g.frac_nodes = base.frac_nodes << k;
            h = 1.0 / g.frac_nodes;
        } else {
            g.step_fraction = base.step_fraction / static_cast<double>(1 << k);
            h = g.step_fraction;
        }
        sweep.levels.push_back({h, evaluate(sc, u, g)});
        hs.push_back(h);
        errors.push_back(sweep.levels.back().report.max_abs);
    }
    sweep.order = fit_order(hs, errors);
    return sweep;
}

double fit_order(const std::vector<double>& h, const std::vector<double>& error) {
    if (h.size() != error.size() || h.size() < 2) throw ParameterError("order fit needs at least two matched samples");
    const double n = static_cast<double>(h.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double lx = std::log(h[i]);
        const double ly = std::log(std::max(error[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalarField perturbed(ScalarField u, double amplitude) {
    return [u = std::move(u), amplitude](std::span<const double> x, double t) {
        double q = 0.0;
        for (const double v : x) q += v * v;
        return u(x, t) + amplitude * q;
    };
}

}  // namespace opburgers::residual
