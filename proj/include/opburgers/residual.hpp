#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opburgers/scenarios.hpp"

namespace opburgers::residual {

struct GridSpec {
    Box box;                   // evaluation box, margins already applied
    Interval time;
    std::vector<int> nodes;    // per spatial axis
    int time_nodes = 8;
    double step_fraction = 1e-3;  // difference step as a fraction of each extent
    int frac_nodes = 2048;        // L1 cells for fractional time
    bool keep_points = false;     // retain per-point terms in the report

    /// Grid over the scenario box (or `region`) shrunk by `margin` per side.
    static GridSpec for_scenario(const Scenario& sc, std::vector<int> nodes, int time_nodes, double margin = 0.05,
                                 const std::optional<Box>& region = std::nullopt);
    void validate() const;
};

/// Signed contributions at one point; `residual` is their sum.
struct Terms {
    double time = 0.0;                // O_t u
    std::vector<double> nonlinear;    // −A_d X_d(u L_d u)
    double diffusion = 0.0;           // −Σ N_d M_d u
    double source = 0.0;              // −(Σ A_d) u
    double residual = 0.0;

    /// Largest magnitude among the individual terms.
    double scale() const;
};

struct PointRecord {
    Sample at;
    Terms terms;
};

struct ResidualReport {
    double max_abs = 0.0;
    double l2 = 0.0;  // root mean square
    std::vector<std::pair<std::string, double>> per_term;  // max |term| by name
    double normalization = 1.0;  // max(1, max |u|)
    int evaluated = 0;
    int excluded = 0;
    GridSpec grid;
    std::vector<PointRecord> points;  // filled when grid.keep_points

    double relative() const { return max_abs / normalization; }
    void write_points_csv(std::ostream& out, const Scenario& sc) const;
};

Terms evaluate_point(const Scenario& sc, const ScalarField& u, std::span<const double> x, double t,
                     const GridSpec& grid);

/// Points whose evaluation throws (stencil, logarithm, quadrature) are
/// excluded and counted; more than 5% exclusions raise EvaluationError.
ResidualReport evaluate(const Scenario& sc, const ScalarField& u, const GridSpec& grid);

struct SweepLevel {
    double h = 0.0;
    ResidualReport report;
};

struct Sweep {
    std::vector<SweepLevel> levels;
    double order = 0.0;
    /// Every level within 10% of (or below) its predecessor.
    bool monotone() const;
};

/// Classical time refines the difference step (step_fraction halves);
/// fractional time refines the L1 cells (frac_nodes doubles) with the spatial
/// step held fixed.
Sweep convergence_sweep(const Scenario& sc, const ScalarField& u, const GridSpec& base, int levels);

/// Least-squares slope of log(error) against log(h).
double fit_order(const std::vector<double>& h, const std::vector<double>& error);

/// u + amplitude·Σ_d x_d², the deliberately wrong control.
ScalarField perturbed(ScalarField u, double amplitude);

}  // namespace opburgers::residual
