#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "opburgers/errors.hpp"
#include "opburgers/invariant.hpp"
#include "opburgers/sampling.hpp"
#include "opburgers/scenarios.hpp"

using namespace opburgers;

namespace {

std::vector<double> steps_for(const Scenario& sc, double fraction) {
    std::vector<double> steps;
    if (sc.metric) {
        // Metric coordinates not mapped to an axis keep a unit-scale step.
        steps.assign(sc.metric->g_diag.size(), fraction);
        for (std::size_t d = 0; d < sc.dims(); ++d) steps[sc.metric->axis_map[d]] = fraction * sc.axes[d].range.extent();
    }
    return steps;
}

}  // namespace

TEST(Catalog, ContainsEveryScenario) {
    std::set<std::string> ids;
    for (const auto& sc : catalog()) {
        ids.insert(sc.id);
        for (const auto& v : sc.variants) ids.insert(v.id);
    }
    for (const char* id : {"euclid-classic", "euclid-frac", "hyp-sinh", "hyp-csch", "hyp-mixed", "hyp-frac",
                           "hyp-frac-laplacian", "hyp-2d", "schwarzschild", "cigar"}) {
        EXPECT_TRUE(ids.count(id)) << id;
    }
    EXPECT_THROW(find_scenario("no-such-id"), ParameterError);
}

TEST(Catalog, ShapesAreConsistent) {
    for (const auto& sc : catalog()) {
        EXPECT_EQ(sc.terms.size(), sc.dims()) << sc.id;
        EXPECT_FALSE(sc.candidates.empty()) << sc.id;
        EXPECT_LT(sc.time_range.lo, sc.time_range.hi) << sc.id;
        for (const auto& term : sc.terms) {
            EXPECT_LT(term.N.axis, sc.dims());
            EXPECT_LT(term.M.axis, sc.dims());
        }
    }
}

TEST(Catalog, GeneratorPropertiesHold) {
    for (const auto& sc : catalog()) {
        if (!sc.has_generators()) continue;
        const Box box = sc.box();
        const auto samples = sampling::halton(shrunk(box, 0.05), sc.time_range, 40, 7);
        const auto report = invariant::check_invariant_space(sc, samples);
        const double tol = sc.id == "schwarzschild" ? 1e-5 : 1e-6;
        for (const auto& row : report.rows) {
            EXPECT_LT(row.max_dev, tol) << sc.id << " " << row.axis << " " << row.property;
        }
    }
}

TEST(Catalog, EuclidGeneratorsTight) {
    const Scenario sc = find_scenario("euclid-classic");
    const auto samples = sampling::halton(shrunk(sc.box(), 0.05), sc.time_range, 40, 3);
    const auto report = invariant::check_invariant_space(sc, samples);
    EXPECT_LT(report.worst("unit"), 1e-8);
    EXPECT_LT(report.worst("kernel"), 1e-8);
    EXPECT_LT(report.worst("NM"), 1e-8);
}

TEST(Geometry, FlatBeltramiOfQuadratic) {
    const std::vector<ScalarField> flat{constant_field(1.0), constant_field(1.0)};
    const ScalarField u = [](std::span<const double> x, double) { return x[0] * x[0] + x[1] * x[1]; };
    const double x[2] = {0.3, -0.4};
    const double steps[2] = {1e-3, 1e-3};
    EXPECT_NEAR(geometry::beltrami_from_metric(flat, x, 0.0, u, steps), 4.0, 1e-7);
}

TEST(Geometry, HyperbolicLogTanhIsHarmonic) {
    const std::vector<ScalarField> g{constant_field(1.0),
                                     [](std::span<const double> x, double) { return std::pow(std::sinh(x[0]), 2); }};
    const ScalarField u = [](std::span<const double> x, double) { return std::log(std::tanh(x[0] / 2)); };
    const double x[2] = {1.1, 0.0};
    const double steps[2] = {1e-3, 1e-3};
    EXPECT_NEAR(geometry::beltrami_from_metric(g, x, 0.0, u, steps), 0.0, 1e-7);
}

TEST(Geometry, SchwarzschildVolumeElement) {
    const Scenario sc = find_scenario("schwarzschild");
    ASSERT_TRUE(sc.metric.has_value());
    for (const double r : {0.4, 1.0, 1.7}) {
        for (const double th : {0.5, 1.2, 2.5}) {
            const double x[4] = {0.2, r, th, 1.0};
            EXPECT_NEAR(geometry::sqrt_abs_det(sc.metric->g_diag, x, 0.5), r * r * std::sin(th), 1e-10);
        }
    }
}

TEST(Geometry, SchwarzschildRadialGeneratorHarmonic) {
    const Scenario sc = find_scenario("schwarzschild");
    const ScalarField radial = sc.terms[1].generators[0].field;
    const double x[4] = {0.1, 0.9, 1.0, 2.0};
    const auto steps = steps_for(sc, 1e-3);
    EXPECT_NEAR(geometry::beltrami_from_metric(sc.metric->g_diag, x, 0.5, radial, steps), 0.0, 1e-4);
}

TEST(Geometry, SingularMetricRejected) {
    const std::vector<ScalarField> g{constant_field(0.0)};
    const ScalarField u = axis_field(0, [](double v) { return v * v; });
    const double x[1] = {0.5};
    const double steps[1] = {1e-3};
    EXPECT_THROW(geometry::beltrami_from_metric(g, x, 0.0, u, steps), SingularMetricError);
}

TEST(Geometry, FactoredOperatorsMatchMetrics) {
    std::vector<Scenario> linked;
    for (const auto& sc : catalog()) {
        if (sc.metric) linked.push_back(sc);
        for (const auto& v : sc.variants) {
            if (v.metric) linked.push_back(v);
        }
    }
    std::set<std::string> seen;
    for (const auto& sc : linked) {
        seen.insert(sc.id);
        std::vector<ScalarField> fields;
        fields.push_back([](std::span<const double> x, double) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) s += std::sin(0.7 * x[i] + 0.3 * static_cast<double>(i));
            return s;
        });
        fields.push_back([](std::span<const double> x, double t) {
            double p = 1.0 + 0.1 * t;
            for (std::size_t i = 0; i < x.size(); ++i) p *= 1.0 + 0.2 * x[i] * x[i];
            return p;
        });
        const auto samples = sampling::halton(shrunk(sc.box(), 0.1), sc.time_range, 12, 11);
        const auto steps = steps_for(sc, 1e-3);
        EXPECT_LT(geometry::metric_consistency(sc, fields, samples, steps), 1e-5) << sc.id;
    }
    for (const char* id : {"hyp-mixed", "hyp-frac-laplacian", "hyp-2d", "schwarzschild", "cigar"}) {
        EXPECT_TRUE(seen.count(id)) << id;
    }
}

TEST(Catalog, OperatorsSatisfyLeibniz) {
    const ScalarField u = [](std::span<const double> x, double t) {
        double s = t;
        for (const double v : x) s += std::cos(v);
        return s;
    };
    const ScalarField v = [](std::span<const double> x, double) {
        double p = 1.0;
        for (const double w : x) p *= 1.0 + 0.3 * w;
        return p;
    };
    for (const auto& sc : catalog()) {
        const auto samples = sampling::halton(shrunk(sc.box(), 0.1), sc.time_range, 10, 5);
        for (const auto& term : sc.terms) {
            for (const SpatialOp* op : {&term.N, &term.M}) {
                const double h = 1e-3 * sc.axes[op->axis].range.extent();
                const double dev = operators::check_leibniz(*op, u, v, samples, h);
                EXPECT_LT(dev, 1e-7) << sc.id << " " << op->label;
            }
        }
    }
}

TEST(Catalog, CandidateRegionsInsideBox) {
    for (const auto& sc : catalog()) {
        const Box box = sc.box();
        for (const auto& cand : sc.candidates) {
            if (!cand.region) continue;
            ASSERT_EQ(cand.region->size(), box.size());
            for (std::size_t d = 0; d < box.size(); ++d) {
                EXPECT_GE((*cand.region)[d].lo, box[d].lo);
                EXPECT_LE((*cand.region)[d].hi, box[d].hi);
            }
        }
    }
}

TEST(Sampling, HaltonIsSeededAndInside) {
    const Box box{{-1.0, 1.0}, {0.2, 3.0}};
    const Interval time{0.1, 2.0};
    const auto a = sampling::halton(box, time, 64, 42);
    const auto b = sampling::halton(box, time, 64, 42);
    const auto c = sampling::halton(box, time, 64, 43);
    ASSERT_EQ(a.size(), 64u);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].x, b[i].x);
        EXPECT_EQ(a[i].t, b[i].t);
        differs = differs || a[i].x != c[i].x;
        for (std::size_t d = 0; d < box.size(); ++d) EXPECT_TRUE(box[d].contains(a[i].x[d]));
        EXPECT_TRUE(time.contains(a[i].t));
    }
    EXPECT_TRUE(differs);
}

TEST(Sampling, TensorGridCount) {
    const Box box{{0.0, 1.0}, {0.0, 2.0}};
    const auto g = sampling::tensor_grid(box, {0.0, 1.0}, {3, 4}, 5);
    EXPECT_EQ(g.size(), 60u);
    EXPECT_DOUBLE_EQ(g.front().x[0], 0.0);
    EXPECT_DOUBLE_EQ(g.back().x[1], 2.0);
    EXPECT_DOUBLE_EQ(g.back().t, 1.0);
}

TEST(Geometry, WrongMetricIsDetected) {
    Scenario sc = find_scenario("hyp-2d");
    ASSERT_TRUE(sc.metric.has_value());
    sc.metric->g_diag = {constant_field(1.0), constant_field(1.0)};
    const ScalarField u = [](std::span<const double> x, double) { return std::cosh(x[0]) + x[1] * x[1]; };
    const auto samples = sampling::halton(shrunk(sc.box(), 0.1), sc.time_range, 12, 11);
    const auto steps = steps_for(sc, 1e-3);
    EXPECT_GT(geometry::metric_consistency(sc, {u}, samples, steps), 1e-1);
}
