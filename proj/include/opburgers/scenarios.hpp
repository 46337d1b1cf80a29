#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opburgers/field.hpp"
#include "opburgers/operators.hpp"

namespace opburgers {

/// Which operator carries the nonlinear term: M for form A, N for form B.
enum class Form { A, B };

enum class GeneratorTag { Unit, Kernel };

struct Generator {
    std::string label;
    ScalarField field;
    GeneratorTag tag = GeneratorTag::Unit;
};

/// Everything attached to one spatial axis of an equation.
struct AxisTerms {
    SpatialOp N;
    SpatialOp M;
    LinearMult L = LinearMult::identity();
    TimeFunction A;
    std::vector<Generator> generators;
    /// Constant eigenvalue of L on the generators; empty when L is not a
    /// constant multiple of the identity.
    std::optional<double> eigenvalue;
};

struct AxisInfo {
    std::string name;
    Interval range;
};

/// Closed form of the time coefficients multiplying the generators.
struct CoefficientModel {
    enum class Kind { None, Riccati, Mittag };
    Kind kind = Kind::None;
    double c = 0.0;       // Riccati constant
    double t0 = 0.0;      // Riccati shift
    double target = 0.0;  // Mittag eigenvalue / bracket constant
};

/// A closed-form solution offered for the equation, optionally with the
/// linear-companion field it comes from.
struct Candidate {
    std::string name;
    std::string description;
    ScalarField u;
    ScalarField companion;  // empty when there is none
    /// Optional sub-box for residual checks (avoids poles of the solution).
    std::optional<Box> region;
    /// Evaluated through adaptive quadrature: differences below the
    /// quadrature noise are meaningless, so step refinement does not apply.
    bool quadrature_based = false;
};

/// Diagonal metric whose Laplace–Beltrami operator the factored operators
/// reproduce. Metric coordinates may outnumber scenario axes (a radial
/// equation embedded in the plane); `axis_map[d]` is the metric coordinate of
/// scenario axis d and unmapped coordinates are held at 0.
struct MetricLink {
    std::vector<ScalarField> g_diag;
    std::vector<std::size_t> axis_map;
    bool companion_order = false;  // compare Σ M∘N instead of Σ N∘M
    std::string note;
};

struct Scenario {
    std::string id;
    std::string equation;  // equation label, for listings
    std::string title;
    std::vector<AxisInfo> axes;
    std::string time_name = "t";
    Interval time_range;
    TimeOp time_op;
    Form form = Form::A;
    std::vector<AxisTerms> terms;
    std::vector<Candidate> candidates;
    std::optional<MetricLink> metric;
    std::vector<Scenario> variants;
    CoefficientModel coefficients;
    std::vector<std::pair<std::string, double>> params;
    double t0 = -1.0;

    std::size_t dims() const { return axes.size(); }
    Box box() const;
    bool has_generators() const;
    const Candidate& candidate(const std::string& name) const;
    /// Σ_d A_d(t).
    double A_sum(double t) const;
};

struct CatalogOptions {
    double beta = 0.6;
    double C = 0.8;
    std::string clock = "t";
    double c = 0.1;
    double t0 = -1.0;
};

std::vector<Scenario> catalog(const CatalogOptions& options = {});

/// Catalog entry by id; ParameterError when unknown.
Scenario find_scenario(const std::string& id, const CatalogOptions& options = {});

namespace geometry {

/// √|det g| for a diagonal metric.
double sqrt_abs_det(const std::vector<ScalarField>& g_diag, std::span<const double> x, double t);

/// (1/√|g|) Σ_d ∂_d(√|g| g^{dd} ∂_d u) by nested Richardson differences, with
/// one step per metric coordinate.
double beltrami_from_metric(const std::vector<ScalarField>& g_diag, std::span<const double> x, double t,
                            const ScalarField& u, std::span<const double> steps);

/// Σ_d N_d(M_d u) (or Σ M_d(N_d u)) at a scenario point, nested Richardson.
double factored_operator(const Scenario& sc, const ScalarField& u, std::span<const double> x, double t,
                         std::span<const double> steps, bool companion_order);

/// max |factored − beltrami| over samples for the scenario's metric link.
double metric_consistency(const Scenario& sc, const std::vector<ScalarField>& fields,
                          const std::vector<Sample>& samples, std::span<const double> steps);

}  // namespace geometry
}  // namespace opburgers
