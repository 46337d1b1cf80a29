#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opburgers/scenarios.hpp"

namespace opburgers::invariant {

/// Maximum deviations of the generator properties, per axis.
struct InvariantReport {
    struct Row {
        std::string axis;
        std::string property;  // "unit", "kernel", "NM", "eigen"
        double max_dev = 0.0;
    };
    std::vector<Row> rows;
    double worst(const std::string& property) const;
};

/// M ω = 1 for unit generators, M ω = 0 for kernel generators, N M ω = 0,
/// and L ω = λ ω, each at every sample. Spatial step per axis is
/// step_fraction × axis extent.
InvariantReport check_invariant_space(const Scenario& sc, const std::vector<Sample>& samples,
                                      double step_fraction = 1e-4);

/// Coefficient system O_t b = b·[Σ_d 2A_d λ_d (Σ unit b_d) + Σ_d A_d],
/// one unknown per generator.
struct CoeffSystem {
    std::vector<std::string> unknowns;
    std::vector<std::size_t> axis_of;
    std::vector<bool> is_unit;
    std::function<double(double t, const std::vector<double>& b)> bracket;
    std::function<std::vector<double>(double t, const std::vector<double>& b)> rhs;
    TimeOp time_op;
};

CoeffSystem build_coeff_system(const Scenario& sc);

struct ConstraintSpec {
    double target = 0.0;
    std::vector<TimeFunction> A;  // one per axis
    TimeFunction coefficient;     // E_β(target f^β), shared by every generator
    double max_deviation = 0.0;   // |bracket − target| over the certification times
};

/// Equal split A_d = target / (m(1 + 2λ_d E)), certified at `samples` times.
ConstraintSpec solve_constraint(const Scenario& sc, double target, int samples = 20);

struct ClosedFormParams {
    enum class Kind { Mittag, Riccati };
    Kind kind = Kind::Mittag;
    double beta = 1.0;
    frac::Clock clock = frac::identity_clock();
    double C = 1.0;
    double c = 0.1;
    double t0 = -1.0;
    Interval window{0.0, 2.0};  // working interval for the pole check
};

struct ClosedForm {
    TimeFunction b;
    std::optional<double> pole;  // Riccati pole inside the window
};

ClosedForm coeff_closed_form(const ClosedFormParams& params);

struct Trajectory {
    std::vector<std::string> labels;
    std::vector<double> t;
    std::vector<std::vector<double>> b;  // b[step][unknown]

    void write_csv(std::ostream& out) const;
};

/// Classical fourth-order Runge–Kutta from t1 to t_end in `steps` steps.
Trajectory integrate_coeff_system(const CoeffSystem& sys, const std::vector<double>& init, double t1, double t_end,
                                  int steps);

/// u = Σ_d Σ_l b_d^(l)(t) ω_d^(l)(x_d), coefficients in generator order.
ScalarField assemble_solution(const Scenario& sc, const std::vector<TimeFunction>& coeffs);

}  // namespace opburgers::invariant
