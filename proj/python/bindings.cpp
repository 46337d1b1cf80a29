#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opburgers/coefficients.hpp"
#include "opburgers/errors.hpp"
#include "opburgers/frac.hpp"
#include "opburgers/kernels.hpp"
#include "opburgers/residual.hpp"
#include "opburgers/specialfn.hpp"
#include "opburgers/transform.hpp"

namespace py = pybind11;
using namespace opburgers;

namespace {

py::dict report_dict(const residual::ResidualReport& r) {
    py::dict per_term;
    for (const auto& [name, value] : r.per_term) per_term[py::str(name)] = value;
    py::dict d;
    d["max_abs"] = r.max_abs;
    d["l2"] = r.l2;
    d["normalization"] = r.normalization;
    d["relative"] = r.relative();
    d["per_term"] = per_term;
    d["evaluated"] = r.evaluated;
    d["excluded"] = r.excluded;
    return d;
}

residual::GridSpec grid_for(const Scenario& sc, const Candidate& cand, std::vector<int> nodes, int time_nodes,
                            int frac_nodes, double step_fraction) {
    if (nodes.empty()) nodes.assign(sc.dims(), sc.dims() > 2 ? 4 : 8);
    auto g = residual::GridSpec::for_scenario(sc, nodes, time_nodes, 0.05, cand.region);
    g.frac_nodes = frac_nodes;
    g.step_fraction = step_fraction;
    return g;
}

py::dict describe(const Scenario& sc) {
    py::list axes;
    for (std::size_t d = 0; d < sc.dims(); ++d) {
        py::dict a;
        a["name"] = sc.axes[d].name;
        a["range"] = py::make_tuple(sc.axes[d].range.lo, sc.axes[d].range.hi);
        a["N"] = sc.terms[d].N.label;
        a["M"] = sc.terms[d].M.label;
        a["L"] = sc.terms[d].L.label;
        axes.append(a);
    }
    py::list candidates;
    for (const auto& c : sc.candidates) candidates.append(c.name);
    py::dict d;
    d["id"] = sc.id;
    d["equation"] = sc.equation;
    d["title"] = sc.title;
    d["form"] = sc.form == Form::A ? "A" : "B";
    d["time_op"] = sc.time_op.describe();
    d["time_range"] = py::make_tuple(sc.time_range.lo, sc.time_range.hi);
    d["axes"] = axes;
    d["candidates"] = candidates;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solutions of operator Burgers equations";

    static py::exception<Error> base(m, "OpBurgersError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParameterError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def("gamma", &specialfn::gamma, py::arg("x"));
    m.def(
        "mittag_leffler",
        py::vectorize([](double beta, double z) { return specialfn::mittag_leffler({beta, z}); }),
        py::arg("beta"), py::arg("z"), "E_beta(z); broadcasts over arrays");
    m.def(
        "hermite",
        [](int n, double f, double h) { return specialfn::hermite_gen({n, f, h}); },
        py::arg("n"), py::arg("f"), py::arg("h"));
    m.def(
        "heat_kernel",
        [](double eta, double t, double rel_tol) { return kernels::hyperbolic_heat_density({eta, t}, rel_tol); },
        py::arg("eta"), py::arg("t"), py::arg("rel_tol") = 1e-10);
    m.def(
        "brownian_solution",
        [](double eta, double t, double t0) { return kernels::brownian_burgers_solution({eta, t}, t0); },
        py::arg("eta"), py::arg("t"), py::arg("t0") = -1.0);
    m.def(
        "riccati",
        [](double c, double t0, double t) { return coefficients::riccati(c, t0)(t); },
        py::arg("c"), py::arg("t0"), py::arg("t"));
    m.def(
        "eigen_check",
        [](double beta, double C, const std::string& clock, std::vector<double> times, int nodes) {
            return frac::eigen_check({beta, frac::clock_by_name(clock)}, C, times, nodes);
        },
        py::arg("beta"), py::arg("C"), py::arg("clock") = "t", py::arg("times") = std::vector<double>{0.5, 1.0, 2.0},
        py::arg("nodes") = 2048);

    m.def("scenario_ids", [] {
        std::vector<std::string> ids;
        for (const auto& sc : catalog()) ids.push_back(sc.id);
        return ids;
    });
    m.def(
        "describe", [](const std::string& id) { return describe(find_scenario(id)); }, py::arg("id"));
    m.def(
        "candidate_value",
        [](const std::string& id, const std::string& name, std::vector<double> x, double t) {
            const Scenario sc = find_scenario(id);
            return sc.candidate(name).u(x, t);
        },
        py::arg("id"), py::arg("candidate"), py::arg("x"), py::arg("t"));
    m.def(
        "residual",
        [](const std::string& id, const std::string& name, std::vector<int> nodes, int time_nodes, double perturb,
           int frac_nodes, double step_fraction) {
            const Scenario sc = find_scenario(id);
            const Candidate& cand = sc.candidate(name);
            const auto grid = grid_for(sc, cand, nodes, time_nodes, frac_nodes, step_fraction);
            const ScalarField u = perturb != 0.0 ? residual::perturbed(cand.u, perturb) : cand.u;
            return report_dict(residual::evaluate(sc, u, grid));
        },
        py::arg("id"), py::arg("candidate"), py::arg("nodes") = std::vector<int>{}, py::arg("time_nodes") = 8,
        py::arg("perturb") = 0.0, py::arg("frac_nodes") = 2048, py::arg("step_fraction") = 1e-3);
    m.def(
        "sweep",
        [](const std::string& id, const std::string& name, int levels, double perturb) {
            const Scenario sc = find_scenario(id);
            const Candidate& cand = sc.candidate(name);
            const bool fractional = sc.time_op.is_fractional();
            const auto grid = grid_for(sc, cand, {}, sc.dims() > 2 ? 4 : 8, 512, fractional ? 1e-3 : 0.02);
            const ScalarField u = perturb != 0.0 ? residual::perturbed(cand.u, perturb) : cand.u;
            const auto sweep = residual::convergence_sweep(sc, u, grid, levels);
            std::vector<double> h, err;
            for (const auto& l : sweep.levels) {
                h.push_back(l.h);
                err.push_back(l.report.max_abs);
            }
            py::dict d;
            d["h"] = h;
            d["max_abs"] = err;
            d["order"] = sweep.order;
            d["monotone"] = sweep.monotone();
            return d;
        },
        py::arg("id"), py::arg("candidate"), py::arg("levels") = 4, py::arg("perturb") = 0.0);
    m.def(
        "backward",
        [](const std::string& id, const std::string& name, double x, double t, bool gauge) {
            const Scenario sc = find_scenario(id);
            auto ctx = transform::context_for(sc);
            ctx.gauge = gauge;
            const double at[1] = {x};
            return transform::backward(ctx, sc.candidate(name).u, at, t);
        },
        py::arg("id"), py::arg("candidate"), py::arg("x"), py::arg("t"), py::arg("gauge") = true);
    m.def(
        "forward_heat",
        [](const std::string& id, int n, double x, double t) {
            const Scenario sc = find_scenario(id);
            const auto ctx = transform::context_for(sc);
            const Generator* unit = nullptr;
            for (const auto& g : sc.terms[0].generators) {
                if (g.tag == GeneratorTag::Unit) unit = &g;
            }
            if (unit == nullptr) throw UnsupportedError("scenario has no unit generator");
            const ScalarField omega = unit->field;
            const ScalarField psi = [n, omega](std::span<const double> y, double s) {
                return specialfn::hermite_gen({n, omega(y, s), s});
            };
            const double at[1] = {x};
            return transform::forward(ctx, psi, at, t);
        },
        py::arg("id"), py::arg("n"), py::arg("x"), py::arg("t"));
}
