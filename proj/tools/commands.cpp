#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opburgers/coefficients.hpp"
#include "opburgers/errors.hpp"
#include "opburgers/format.hpp"
#include "opburgers/invariant.hpp"
#include "opburgers/kernels.hpp"
#include "opburgers/residual.hpp"
#include "opburgers/sampling.hpp"
#include "opburgers/specialfn.hpp"
#include "opburgers/transform.hpp"

namespace opburgers::cli {

namespace {

using json = nlohmann::ordered_json;
using format::number;
using format::rounded;

struct Check {
    std::string name;
    double max_dev = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string detail;
};

Check upper(std::string name, double dev, double tol) {
    return {std::move(name), dev, tol, std::isfinite(dev) && dev <= tol, {}};
}

std::string time_kind(const Scenario& sc) { return sc.time_op.is_fractional() ? "fractional" : "classical"; }

std::vector<Scenario> listing(const CatalogOptions& options = {}) { return catalog(options); }

// Smooth probe fields for operator identities.
ScalarField probe_u() {
    return [](std::span<const double> x, double t) {
        double s = 0.1 * t;
        for (std::size_t i = 0; i < x.size(); ++i) s += std::sin(0.7 * x[i] + 0.3 * static_cast<double>(i));
        return s;
    };
}

ScalarField probe_v() {
    return [](std::span<const double> x, double t) {
        double p = 1.0 + 0.1 * t;
        for (const double v : x) p *= 1.0 + 0.2 * v * v;
        return p;
    };
}

residual::GridSpec default_grid(const Scenario& sc, const std::vector<int>& grid, const Candidate& cand) {
    std::vector<int> nodes(sc.dims(), sc.dims() > 2 ? 4 : 8);
    int time_nodes = sc.dims() > 2 ? 4 : 8;
    if (!grid.empty()) {
        if (grid.size() != sc.dims() + 1) {
            throw ParameterError("--grid needs " + std::to_string(sc.dims() + 1) + " counts (axes then time)");
        }
        nodes.assign(grid.begin(), grid.end() - 1);
        time_nodes = grid.back();
    }
    auto g = residual::GridSpec::for_scenario(sc, nodes, time_nodes, 0.05, cand.region);
    if (sc.time_op.is_fractional()) {
        g.frac_nodes = 512;
        g.step_fraction = 1e-3;
    } else {
        g.step_fraction = 0.02;
    }
    return g;
}

std::vector<double> metric_steps(const Scenario& sc, double fraction) {
    std::vector<double> steps(sc.metric->g_diag.size(), fraction);
    for (std::size_t d = 0; d < sc.dims(); ++d) steps[sc.metric->axis_map[d]] = fraction * sc.axes[d].range.extent();
    return steps;
}

std::vector<Check> structural_checks(const Scenario& sc, std::uint64_t seed) {
    std::vector<Check> checks;
    const auto samples = sampling::halton(shrunk(sc.box(), 0.05), sc.time_range.shrunk(0.05), 32, seed);

    if (sc.has_generators()) {
        const double tol = sc.dims() > 2 ? 1e-5 : 1e-6;
        for (const auto& row : invariant::check_invariant_space(sc, samples).rows) {
            checks.push_back(upper("generator[" + row.axis + "]:" + row.property, row.max_dev, tol));
        }
    }

    const ScalarField u = probe_u();
    const ScalarField v = probe_v();
    for (std::size_t d = 0; d < sc.dims(); ++d) {
        const AxisTerms& term = sc.terms[d];
        const double h = 1e-3 * sc.axes[d].range.extent();
        for (const auto& [role, op] : {std::pair<const char*, const SpatialOp*>{"N", &term.N}, {"M", &term.M}}) {
            const std::string tag = std::string(role) + "[" + sc.axes[d].name + "]";
            checks.push_back(upper("leibniz:" + tag, operators::check_leibniz(*op, u, v, samples, h), 1e-5));
            if (!sc.time_op.is_fractional()) {
                const double dev =
                    operators::check_commutator(sc.time_op, *op, u, samples, h, 1e-3 * sc.time_range.extent());
                checks.push_back(upper("commutator:" + tag, dev, 1e-5));
            }
        }
        if (sc.form == Form::B && term.L.label != "I") {
            checks.push_back(upper("factorization[" + sc.axes[d].name + "]",
                                   operators::check_factorization(term.M, term.L, term.N, u, samples, h), 1e-8));
        }
        if (!sc.time_op.is_fractional()) {
            std::vector<double> times;
            for (const auto& s : samples) times.push_back(s.t);
            checks.push_back(upper("riccati-identity[" + sc.axes[d].name + "]",
                                   operators::check_A_ode(sc.time_op, term.A, times), 1e-6));
        }
    }

    if (sc.coefficients.kind == CoefficientModel::Kind::Mittag) {
        const auto spec = invariant::solve_constraint(sc, sc.coefficients.target);
        checks.push_back(upper("constraint-identity", spec.max_deviation, 1e-9));
    }
    if (sc.coefficients.kind == CoefficientModel::Kind::Riccati) {
        const auto sys = invariant::build_coeff_system(sc);
        const auto b = coefficients::riccati(sc.coefficients.c, sc.coefficients.t0);
        const auto traj = invariant::integrate_coeff_system(sys, std::vector<double>(sys.unknowns.size(), b(0.0)),
                                                            0.0, sc.time_range.hi, 4000);
        double dev = 0.0;
        for (std::size_t i = 0; i < traj.t.size(); ++i) {
            for (const double value : traj.b[i]) dev = std::max(dev, std::abs(value - b(traj.t[i])));
        }
        checks.push_back(upper("coefficient-oracle", dev, 1e-7));
    }
    if (sc.metric) {
        const double dev = geometry::metric_consistency(sc, {u, v}, samples, metric_steps(sc, 1e-3));
        checks.push_back(upper("metric-consistency", dev, 1e-5));
    }
    return checks;
}

struct CandidateRun {
    std::string name;
    std::optional<residual::Sweep> sweep;
    std::optional<residual::ResidualReport> report;  // finest level or single evaluation
    double relative = 0.0;
};

json report_json(const residual::ResidualReport& r) {
    json per_term = json::object();
    for (const auto& [name, value] : r.per_term) per_term[name] = rounded(value);
    return {{"max_abs", rounded(r.max_abs)},
            {"l2", rounded(r.l2)},
            {"normalization", rounded(r.normalization)},
            {"per_term", per_term},
            {"evaluated", r.evaluated},
            {"excluded", r.excluded}};
}

std::vector<const Candidate*> selected_candidates(const Scenario& sc, const std::string& name) {
    std::vector<const Candidate*> out;
    if (!name.empty()) {
        out.push_back(&sc.candidate(name));
    } else {
        for (const auto& c : sc.candidates) out.push_back(&c);
    }
    return out;
}

// Anchoring at the sample keeps the antiderivative path inside the stencil,
// away from zeros of ψ elsewhere on the axis. The anchor and the gauge only
// shift ln ψ by a function of time, which N removes.
transform::TransformContext roundtrip_context(transform::TransformContext ctx, double x) {
    ctx.x0 = x;
    ctx.gauge = false;
    ctx.nodes = 16;
    return ctx;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw ParameterError("cannot write '" + path + "'");
    file << text;
}

}  // namespace

std::vector<int> parse_grid(const std::string& text) {
    std::vector<int> counts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, 'x');) {
        std::size_t used = 0;
        const int value = std::stoi(part, &used);
        if (used != part.size() || value <= 0) throw std::invalid_argument("bad grid '" + text + "'");
        counts.push_back(value);
    }
    if (counts.empty()) throw std::invalid_argument("empty grid");
    return counts;
}

int cmd_list(const std::string& fmt, std::ostream& out) {
    const auto entries = listing();
    if (fmt == "json") {
        json rows = json::array();
        for (const auto& sc : entries) {
            rows.push_back({{"id", sc.id},
                            {"equation", sc.equation},
                            {"dims", sc.dims()},
                            {"time_op", time_kind(sc)},
                            {"title", sc.title}});
        }
        out << rows.dump(2) << '\n';
        return kPass;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %-9s %-5s %-11s %s\n", "id", "equation", "dims", "time-op", "title");
    out << line;
    for (const auto& sc : entries) {
        std::snprintf(line, sizeof line, "%-16s %-9s %-5zu %-11s %s\n", sc.id.c_str(), sc.equation.c_str(), sc.dims(),
                      time_kind(sc).c_str(), sc.title.c_str());
        out << line;
    }
    return kPass;
}

int cmd_describe(const std::string& id, const CatalogOptions& options, const std::string& fmt, std::ostream& out) {
    const Scenario sc = find_scenario(id, options);
    json axes = json::array();
    for (std::size_t d = 0; d < sc.dims(); ++d) {
        const AxisTerms& term = sc.terms[d];
        json generators = json::array();
        for (const auto& g : term.generators) {
            generators.push_back({{"label", g.label}, {"kind", g.tag == GeneratorTag::Unit ? "unit" : "kernel"}});
        }
        json axis = {{"name", sc.axes[d].name},
                     {"range", {rounded(sc.axes[d].range.lo), rounded(sc.axes[d].range.hi)}},
                     {"N", term.N.label},
                     {"M", term.M.label},
                     {"L", term.L.label},
                     {"generators", generators}};
        if (term.eigenvalue) axis["eigenvalue"] = rounded(*term.eigenvalue);
        axes.push_back(axis);
    }
    json candidates = json::array();
    for (const auto& c : sc.candidates) {
        candidates.push_back({{"name", c.name}, {"u", c.description}, {"companion", static_cast<bool>(c.companion)}});
    }
    json params = json::object();
    for (const auto& [name, value] : sc.params) params[name] = rounded(value);
    json doc = {{"id", sc.id},
                {"equation", sc.equation},
                {"title", sc.title},
                {"form", sc.form == Form::A ? "A" : "B"},
                {"time", {{"name", sc.time_name}, {"range", {rounded(sc.time_range.lo), rounded(sc.time_range.hi)}},
                          {"operator", sc.time_op.describe()}}},
                {"axes", axes},
                {"candidates", candidates},
                {"params", params}};
    if (sc.metric) doc["metric"] = sc.metric->note;
    if (fmt == "json") {
        out << doc.dump(2) << '\n';
        return kPass;
    }
    out << sc.id << " (" << sc.equation << "): " << sc.title << '\n';
    out << "  form " << (sc.form == Form::A ? "A" : "B") << ", time " << sc.time_name << " in ["
        << number(sc.time_range.lo) << ", " << number(sc.time_range.hi) << "], " << sc.time_op.describe() << '\n';
    for (std::size_t d = 0; d < sc.dims(); ++d) {
        const AxisTerms& term = sc.terms[d];
        out << "  axis " << sc.axes[d].name << " in [" << number(sc.axes[d].range.lo) << ", "
            << number(sc.axes[d].range.hi) << "]: N = " << term.N.label << ", M = " << term.M.label
            << ", L = " << term.L.label;
        for (const auto& g : term.generators) out << (&g == &term.generators.front() ? ", W = <" : ", ") << g.label;
        if (!term.generators.empty()) out << '>';
        out << '\n';
    }
    for (const auto& c : sc.candidates) out << "  candidate " << c.name << ": " << c.description << '\n';
    if (sc.metric) out << "  metric: " << sc.metric->note << '\n';
    return kPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Scenario sc;
    std::vector<const Candidate*> chosen;
    try {
        sc = find_scenario(cfg.scenario, cfg.catalog);
        chosen = selected_candidates(sc, cfg.candidate);
        for (const Candidate* c : chosen) default_grid(sc, cfg.grid, *c);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::vector<Check> checks;
    try {
        checks = structural_checks(sc, cfg.seed);
    } catch (const Error& e) {
        checks.push_back({"structural", NAN, 0.0, false, e.what()});
    }

    std::vector<CandidateRun> runs;
    for (const Candidate* cand : chosen) {
        CandidateRun run;
        run.name = cand->name;
        const ScalarField u = cfg.perturb != 0.0 ? residual::perturbed(cand->u, cfg.perturb) : cand->u;
        const std::string tag = "residual[" + cand->name + "]";
        try {
            auto grid = default_grid(sc, cfg.grid, *cand);
            if (cand->quadrature_based) {
                // Fixed step, compared against the largest term at each point.
                grid.step_fraction = 5e-3;
                grid.keep_points = true;
                auto report = residual::evaluate(sc, u, grid);
                for (const auto& p : report.points) {
                    run.relative = std::max(run.relative, std::abs(p.terms.residual) / p.terms.scale());
                }
                checks.push_back(upper(tag + ":relative", run.relative, cfg.tol.value_or(1e-2)));
                run.report = std::move(report);
            } else {
                grid.keep_points = !cfg.dump_points.empty();
                auto sweep = residual::convergence_sweep(sc, u, grid, cfg.levels);
                const auto& finest = sweep.levels.back().report;
                run.relative = finest.relative();
                double lo = 1.8;
                double hi = INFINITY;
                if (sc.time_op.is_fractional()) {
                    lo = 2.0 - sc.time_op.frac.beta - 0.3;
                    hi = 2.0 - sc.time_op.frac.beta + 0.5;
                }
                Check order{tag + ":order", std::max({0.0, lo - sweep.order, sweep.order - hi}), 0.0, false, {}};
                order.pass = std::isfinite(sweep.order) && order.max_dev == 0.0;
                order.detail = "order " + number(sweep.order) + ", required [" + number(lo) + ", " + number(hi) + "]";
                checks.push_back(order);
                double ratio = 0.0;
                for (std::size_t i = 1; i < sweep.levels.size(); ++i) {
                    const double prev = sweep.levels[i - 1].report.max_abs;
                    ratio = std::max(ratio, prev > 0.0 ? sweep.levels[i].report.max_abs / prev : 0.0);
                }
                checks.push_back(upper(tag + ":monotone", ratio, 1.1));
                checks.push_back(upper(tag + ":final", run.relative, cfg.tol.value_or(1e-3)));
                run.report = finest;
                run.sweep = std::move(sweep);
            }
        } catch (const Error& e) {
            checks.push_back({tag, NAN, 0.0, false, e.what()});
        }
        runs.push_back(std::move(run));
    }

    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;

    std::ostringstream text;
    if (cfg.format == "csv") {
        text << "name,max_dev,tol,pass\n";
        for (const auto& c : checks) {
            text << c.name << ',' << number(c.max_dev) << ',' << number(c.tol) << ',' << (c.pass ? "true" : "false")
                 << '\n';
        }
    } else {
        json jchecks = json::array();
        for (const auto& c : checks) {
            json row = {{"name", c.name},
                        {"max_dev", std::isfinite(c.max_dev) ? json(rounded(c.max_dev)) : json(nullptr)},
                        {"tol", rounded(c.tol)},
                        {"pass", c.pass}};
            if (!c.detail.empty()) row["detail"] = c.detail;
            jchecks.push_back(row);
        }
        json residuals = json::array();
        int excluded = 0;
        for (const auto& run : runs) {
            if (!run.report) continue;
            json r = {{"candidate", run.name}};
            const json body = report_json(*run.report);
            for (const auto& [k, v] : body.items()) r[k] = v;
            r["relative"] = rounded(run.relative);
            if (run.sweep) {
                r["order"] = rounded(run.sweep->order);
                json levels = json::array();
                for (const auto& l : run.sweep->levels) {
                    levels.push_back({{"h", rounded(l.h)}, {"max_abs", rounded(l.report.max_abs)}});
                }
                r["levels"] = levels;
            } else {
                r["order"] = nullptr;
            }
            excluded += run.report->excluded;
            residuals.push_back(r);
        }
        json doc = {{"scenario", sc.id},
                    {"perturb", rounded(cfg.perturb)},
                    {"seed", cfg.seed},
                    {"checks", jchecks},
                    {"residual", residuals.empty() ? json(nullptr) : residuals.front()},
                    {"residuals", residuals},
                    {"excluded_points", excluded},
                    {"pass", pass}};
        text << doc.dump(2) << '\n';
    }
    try {
        write_output(cfg.out, text.str(), out);
        if (!cfg.dump_points.empty() && !runs.empty() && runs.front().report) {
            std::ostringstream dump;
            runs.front().report->write_points_csv(dump, sc);
            write_output(cfg.dump_points, dump.str(), out);
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (!cfg.out.empty()) {
        out << (pass ? "PASS" : "FAIL") << ' ' << sc.id;
        for (const auto& c : checks) {
            if (!c.pass) out << ' ' << c.name;
        }
        out << '\n';
    }
    return pass ? kPass : kFail;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Scenario sc;
    const Candidate* cand = nullptr;
    residual::GridSpec grid;
    try {
        sc = find_scenario(cfg.scenario, cfg.catalog);
        cand = selected_candidates(sc, cfg.candidate).front();
        grid = default_grid(sc, cfg.grid, *cand);
        if (cfg.levels < 3) throw ParameterError("--levels must be at least 3");
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    const ScalarField u = cfg.perturb != 0.0 ? residual::perturbed(cand->u, cfg.perturb) : cand->u;
    try {
        const auto sweep = residual::convergence_sweep(sc, u, grid, cfg.levels);
        std::ostringstream text;
        if (cfg.format == "csv") {
            text << "h,max_abs,l2\n";
            for (const auto& l : sweep.levels) {
                text << number(l.h) << ',' << number(l.report.max_abs) << ',' << number(l.report.l2) << '\n';
            }
            text << "# order " << number(sweep.order) << '\n';
        } else {
            json levels = json::array();
            for (const auto& l : sweep.levels) {
                levels.push_back({{"h", rounded(l.h)}, {"max_abs", rounded(l.report.max_abs)}, {"l2", rounded(l.report.l2)}});
            }
            json doc = {{"scenario", sc.id},
                        {"candidate", cand->name},
                        {"refine", sc.time_op.is_fractional() ? "frac_nodes" : "step"},
                        {"levels", levels},
                        {"order", rounded(sweep.order)},
                        {"monotone", sweep.monotone()}};
            text << doc.dump(2) << '\n';
        }
        write_output(cfg.out, text.str(), out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFail;
    }
    return kPass;
}

int cmd_transform(const TransformConfig& cfg, std::ostream& out, std::ostream& err) {
    Scenario sc;
    transform::TransformContext ctx;
    std::vector<int> grid{11, 6};
    try {
        sc = find_scenario(cfg.scenario, cfg.catalog);
        if (sc.dims() != 1) throw UnsupportedError("transform tables are one-dimensional");
        ctx = transform::context_for(sc);
        if (!cfg.grid.empty()) grid = cfg.grid;
        if (grid.size() != 2 || grid[0] < 2 || grid[1] < 2) throw ParameterError("--grid must be NxM with N, M >= 2");
        if (cfg.direction != "forward" && cfg.direction != "backward") {
            throw ParameterError("direction must be forward or backward");
        }
        if (cfg.n && (*cfg.n < 1 || *cfg.n > specialfn::kHermiteMaxDegree)) throw ParameterError("--n out of range");
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    // Forward input: a heat polynomial in the unit generator, or the
    // candidate's companion when the axis has no generators.
    ScalarField input;
    std::string input_name;
    ScalarField expected;
    const AxisTerms& term = sc.terms[0];
    const Generator* unit = nullptr;
    for (const auto& g : term.generators) {
        if (g.tag == GeneratorTag::Unit) unit = &g;
    }
    try {
        if (cfg.direction == "forward") {
            if (unit != nullptr || cfg.n) {
                if (unit == nullptr) throw ParameterError("scenario has no unit generator for heat polynomials");
                const int n = cfg.n.value_or(2);
                const ScalarField omega = unit->field;
                const double t0 = sc.t0;
                input = [n, omega](std::span<const double> x, double t) {
                    return specialfn::hermite_gen({n, omega(x, t), t});
                };
                expected = [n, omega, t0](std::span<const double> x, double t) {
                    const double f = omega(x, t);
                    return (t - t0) * n * specialfn::hermite_gen({n - 1, f, t}) / specialfn::hermite_gen({n, f, t});
                };
                input_name = "H_" + std::to_string(n) + "(" + unit->label + ", t)";
            } else {
                const Candidate& cand = cfg.candidate.empty() ? sc.candidates.front() : sc.candidate(cfg.candidate);
                if (!cand.companion) throw ParameterError("candidate '" + cand.name + "' has no companion");
                input = cand.companion;
                expected = cand.u;
                input_name = "companion of " + cand.name;
            }
        } else {
            std::string name = cfg.candidate;
            if (name.empty()) {
                name = sc.candidates.front().name;
                for (const auto& c : sc.candidates) {
                    if (c.name == "invariant") name = c.name;
                }
            }
            const Candidate& cand = sc.candidate(name);
            input = cand.u;
            input_name = cand.name;
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const std::string& xname = sc.axes[0].name;
    const Interval xr = sc.axes[0].range.shrunk(0.05);
    const Interval tr = sc.time_range.shrunk(0.05);
    std::ostringstream text;
    text << "# " << sc.id << ' ' << cfg.direction << " of " << input_name << "; anchor " << xname << "0="
         << number(ctx.x0) << ", gauge reference " << sc.time_name << "=" << number(ctx.t_ref) << '\n';
    const bool fwd = cfg.direction == "forward";
    text << xname << ',' << sc.time_name << ',' << (fwd ? "psi,u,expected_u" : "u,psi,phase,gauge")
         << ",roundtrip,status\n";
    int excluded = 0;
    const auto samples = sampling::tensor_grid({xr}, tr, {grid[0]}, grid[1]);
    for (const auto& s : samples) {
        text << number(s.x[0]) << ',' << number(s.t) << ',';
        try {
            if (fwd) {
                const double psi = input(s.x, s.t);
                const double u = transform::forward(ctx, input, s.x, s.t);
                const auto local = roundtrip_context(ctx, s.x[0]);
                const ScalarField psi_back = transform::backward_field(local, transform::forward_field(ctx, input));
                const double again = transform::forward(local, psi_back, s.x, s.t);
                text << number(psi) << ',' << number(u) << ',' << number(expected(s.x, s.t)) << ','
                     << number(std::abs(again - u)) << ",ok\n";
            } else {
                const double u = input(s.x, s.t);
                const auto parts = transform::backward_parts(ctx, input, s.x, s.t);
                const auto local = roundtrip_context(ctx, s.x[0]);
                const double again = transform::forward(local, transform::backward_field(local, input), s.x, s.t);
                text << number(u) << ',' << number(parts.value) << ',' << number(parts.phase) << ','
                     << number(parts.gauge) << ',' << number(std::abs(again - u)) << ",ok\n";
            }
        } catch (const Error&) {
            ++excluded;
            text << number(input(s.x, s.t)) << (fwd ? ",,," : ",,,,") << ",excluded\n";
        }
    }
    text << "# excluded " << excluded << " of " << samples.size() << '\n';
    try {
        write_output(cfg.out, text.str(), out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kPass;
}

int cmd_special(const SpecialConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.function == "ml") {
            out << number(specialfn::mittag_leffler({cfg.beta, cfg.z})) << '\n';
        } else if (cfg.function == "hermite") {
            out << number(specialfn::hermite_gen({cfg.n, cfg.f, cfg.h})) << '\n';
        } else if (cfg.function == "kernel") {
            if (cfg.count > 0) {
                out << "eta,t,density,u\n";
                for (int i = 0; i < cfg.count; ++i) {
                    const double eta = cfg.count == 1 ? 0.5 : 0.5 + 2.0 * i / (cfg.count - 1);
                    const kernels::KernelPoint p{eta, cfg.t};
                    out << number(eta) << ',' << number(cfg.t) << ',' << number(kernels::hyperbolic_heat_density(p))
                        << ',' << number(kernels::brownian_burgers_solution(p, cfg.t0)) << '\n';
                }
            } else {
                out << number(kernels::hyperbolic_heat_density({cfg.eta, cfg.t})) << '\n';
            }
        } else {
            err << "error: unknown function '" << cfg.function << "'\n";
            return kUsage;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFail;
    }
    return kPass;
}

}  // namespace opburgers::cli
