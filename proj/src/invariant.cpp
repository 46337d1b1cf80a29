#include "opburgers/invariant.hpp"

#include <cmath>
#include <ostream>

#include "opburgers/coefficients.hpp"
#include "opburgers/errors.hpp"
#include "opburgers/format.hpp"

namespace opburgers::invariant {

double InvariantReport::worst(const std::string& property) const {
    double out = 0.0;
    for (const auto& r : rows) {
        if (r.property == property) out = std::max(out, r.max_dev);
    }
    return out;
}

InvariantReport check_invariant_space(const Scenario& sc, const std::vector<Sample>& samples,
                                      double step_fraction) {
    const Box box = sc.box();
    InvariantReport report;
    for (std::size_t d = 0; d < sc.terms.size(); ++d) {
        const AxisTerms& term = sc.terms[d];
        if (term.generators.empty()) continue;
        const double h_m = step_fraction * box[term.M.axis].extent();
        const double h_n = step_fraction * box[term.N.axis].extent();
        double unit_dev = 0.0;
        double kernel_dev = 0.0;
        double nm_dev = 0.0;
        double eigen_dev = 0.0;
        for (const auto& g : term.generators) {
            const ScalarField m_omega = operators::applied(term.M, g.field, h_m);
            const double expected = g.tag == GeneratorTag::Unit ? 1.0 : 0.0;
            for (const auto& s : samples) {
                const double m_value = m_omega(s.x, s.t);
                double& slot = g.tag == GeneratorTag::Unit ? unit_dev : kernel_dev;
                slot = std::max(slot, std::abs(m_value - expected));
                nm_dev = std::max(nm_dev, std::abs(operators::apply_spatial(term.N, m_omega, s.x, s.t, h_n)));
                if (term.eigenvalue) {
                    const double w = g.field(s.x, s.t);
                    eigen_dev = std::max(eigen_dev, std::abs(term.L.multiplier(s.x, s.t) * w - *term.eigenvalue * w));
                }
            }
        }
        const std::string& name = sc.axes[d].name;
        report.rows.push_back({name, "unit", unit_dev});
        report.rows.push_back({name, "kernel", kernel_dev});
        report.rows.push_back({name, "NM", nm_dev});
        if (term.eigenvalue) report.rows.push_back({name, "eigen", eigen_dev});
    }
    return report;
}

CoeffSystem build_coeff_system(const Scenario& sc) {
    CoeffSystem sys;
    sys.time_op = sc.time_op;
    std::vector<TimeFunction> A;
    std::vector<double> lambda;
    for (std::size_t d = 0; d < sc.terms.size(); ++d) {
        const AxisTerms& term = sc.terms[d];
        A.push_back(term.A);
        lambda.push_back(term.eigenvalue.value_or(0.0));
        for (const auto& g : term.generators) {
            sys.unknowns.push_back("b_" + sc.axes[d].name + "[" + g.label + "]");
            sys.axis_of.push_back(d);
            sys.is_unit.push_back(g.tag == GeneratorTag::Unit);
        }
    }
    const auto axis_of = sys.axis_of;
    const auto is_unit = sys.is_unit;
    const std::size_t dims = sc.terms.size();
    sys.bracket = [A, lambda, axis_of, is_unit, dims](double t, const std::vector<double>& b) {
        std::vector<double> unit_sum(dims, 0.0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (is_unit[i]) unit_sum[axis_of[i]] += b[i];
        }
        double value = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            const double a = A[d](t);
            value += 2.0 * a * lambda[d] * unit_sum[d] + a;
        }
        return value;
    };
    const auto bracket = sys.bracket;
    sys.rhs = [bracket](double t, const std::vector<double>& b) {
        const double common = bracket(t, b);
        std::vector<double> out(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] * common;
        return out;
    };

    // Structural check: every component must be b_i times one shared factor.
    if (!sys.unknowns.empty()) {
        const double t = sc.time_range.mid();
        std::vector<double> probe(sys.unknowns.size());
        for (std::size_t i = 0; i < probe.size(); ++i) probe[i] = 0.3 + 0.17 * static_cast<double>(i);
        const auto value = sys.rhs(t, probe);
        const double factor = value[0] / probe[0];
        for (std::size_t i = 1; i < probe.size(); ++i) {
            if (std::abs(value[i] / probe[i] - factor) > 1e-12 * std::max(1.0, std::abs(factor))) {
                throw Error("coefficient system lacks the shared bracket factor");
            }
        }
    }
    return sys;
}

ConstraintSpec solve_constraint(const Scenario& sc, double target, int samples) {
    // Classical time uses the β = 1 eigenfunction exp(target·t).
    const double beta = sc.time_op.is_fractional() ? sc.time_op.frac.beta : 1.0;
    const frac::Clock clock = sc.time_op.is_fractional() ? sc.time_op.frac.clock : frac::identity_clock();
    const int m = static_cast<int>(sc.terms.size());
    ConstraintSpec spec;
    spec.target = target;
    spec.coefficient = coefficients::mittag(beta, clock, target);
    for (const auto& term : sc.terms) {
        if (!term.eigenvalue) {
            throw UnsupportedError("constraint split needs a constant eigenvalue on every axis of '" + sc.id + "'");
        }
        spec.A.push_back(coefficients::split_coefficient(beta, clock, target, m, *term.eigenvalue));
    }

    // Certify: the bracket with every unit coefficient equal to E must give the target.
    for (int i = 0; i < samples; ++i) {
        const double t = sc.time_range.lo + sc.time_range.extent() * i / std::max(1, samples - 1);
        const double E = spec.coefficient(t);
        double bracket = 0.0;
        for (std::size_t d = 0; d < sc.terms.size(); ++d) {
            const double a = spec.A[d](t);
            int units = 0;
            for (const auto& g : sc.terms[d].generators) units += g.tag == GeneratorTag::Unit ? 1 : 0;
            bracket += 2.0 * a * *sc.terms[d].eigenvalue * units * E + a;
        }
        spec.max_deviation = std::max(spec.max_deviation, std::abs(bracket - target));
    }
    return spec;
}

ClosedForm coeff_closed_form(const ClosedFormParams& p) {
    ClosedForm out;
    if (p.kind == ClosedFormParams::Kind::Mittag) {
        out.b = coefficients::mittag(p.beta, p.clock, p.C);
        return out;
    }
    out.b = coefficients::riccati(p.c, p.t0);
    if (p.c != 0.0) {
        const double pole = p.t0 + 1.0 / (2.0 * p.c);
        if (p.window.contains(pole)) out.pole = pole;
    }
    return out;
}

void Trajectory::write_csv(std::ostream& out) const {
    out << "t";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
        out << format::number(t[i]);
        for (const double v : b[i]) out << ',' << format::number(v);
        out << '\n';
    }
}

Trajectory integrate_coeff_system(const CoeffSystem& sys, const std::vector<double>& init, double t1, double t_end,
                                  int steps) {
    if (sys.time_op.is_fractional()) {
        throw UnsupportedError("fractional coefficient systems have no step-local form");
    }
    if (steps < 100) throw ParameterError("integration needs at least 100 steps");
    if (init.size() != sys.unknowns.size()) throw ArityError("initial state size does not match the unknowns");
    Trajectory traj;
    traj.labels = sys.unknowns;
    const double h = (t_end - t1) / steps;
    std::vector<double> b = init;
    traj.t.push_back(t1);
    traj.b.push_back(b);
    const auto axpy = [](const std::vector<double>& x, double a, const std::vector<double>& y) {
        std::vector<double> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * y[i];
        return out;
    };
    for (int n = 0; n < steps; ++n) {
        const double t = t1 + n * h;
        const auto k1 = sys.rhs(t, b);
        const auto k2 = sys.rhs(t + 0.5 * h, axpy(b, 0.5 * h, k1));
        const auto k3 = sys.rhs(t + 0.5 * h, axpy(b, 0.5 * h, k2));
        const auto k4 = sys.rhs(t + h, axpy(b, h, k3));
        for (std::size_t i = 0; i < b.size(); ++i) {
            b[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(b[i]) || std::abs(b[i]) > 1e12) {
                throw BlowUpError("coefficient integration blew up", t + h);
            }
        }
        traj.t.push_back(t1 + (n + 1) * h);
        traj.b.push_back(b);
    }
    return traj;
}

ScalarField assemble_solution(const Scenario& sc, const std::vector<TimeFunction>& coeffs) {
    std::vector<ScalarField> fields;
    for (const auto& term : sc.terms) {
        for (const auto& g : term.generators) fields.push_back(g.field);
    }
    if (fields.size() != coeffs.size()) {
        throw ArityError("expected " + std::to_string(fields.size()) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    }
    return [fields, coeffs](std::span<const double> x, double t) {
        double sum = 0.0;
        for (std::size_t i = 0; i < fields.size(); ++i) sum += coeffs[i](t) * fields[i](x, t);
        return sum;
    };
}

}  // namespace opburgers::invariant
