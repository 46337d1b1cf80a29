#pragma once

#include <vector>

namespace opburgers::specialfn {

struct MLParams {
    double beta = 1.0;  // order in (0, 1]
    double arg = 0.0;   // argument z
};

struct HermiteArgs {
    int n = 0;          // degree
    double fval = 0.0;  // spatial argument f(x)
    double hval = 0.0;  // temporal argument h(t)
};

/// Largest degree whose factorials fit the integer table.
inline constexpr int kHermiteMaxDegree = 20;

/// Γ(x) for x > 0.
double gamma(double x);

/// One-parameter Mittag-Leffler function E_β(z) = Σ z^k / Γ(βk + 1).
double mittag_leffler(const MLParams& p);

/// Mittag-Leffler evaluator for a fixed order with the series coefficients
/// 1/Γ(βk+1) tabulated once. Gives the same values as mittag_leffler().
class MittagLeffler {
public:
    explicit MittagLeffler(double beta);
    double beta() const { return beta_; }
    double operator()(double z) const;

private:
    double beta_;
    std::vector<long double> log_gamma_;  // ln Γ(βk+1)
    std::vector<long double> inv_gamma_;  // 1/Γ(βk+1), 0 where it underflows
};

/// Heat polynomial n! Σ_r h^r f^(n−2r) / ((n−2r)! r!).
double hermite_gen(const HermiteArgs& a);

}  // namespace opburgers::specialfn
