#include "opburgers/specialfn.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>

#include "opburgers/compensated.hpp"
#include "opburgers/errors.hpp"

namespace opburgers::specialfn {

namespace {

constexpr int kTermCap = 500;
constexpr long double kRelativeStop = 1e-15L;
// Above this, Γ(βk+1) is formed in log space.
constexpr long double kGammaDirectLimit = 170.0;

void check_order(double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw ParameterError("Mittag-Leffler order must lie in (0, 1], got " + std::to_string(beta));
    }
}

// Series driver shared by the one-shot and tabulated evaluators. `coeff(k)`
// returns {1/Γ(βk+1), ln Γ(βk+1)}; the reciprocal is 0 where it underflows.
// Terms and the running sum are kept in extended precision: for negative z the
// alternating terms can exceed the result by several orders of magnitude.
template <class Coeff>
double ml_series(double z, Coeff&& coeff) {
    if (z == 0.0) return 1.0;
    const long double zl = z;
    const long double log_abs_z = std::log(std::abs(zl));
    long double sum = 1.0L;
    long double carry = 0.0L;
    long double previous = 1.0L;
    long double power = 1.0L;
    for (int k = 1; k < kTermCap; ++k) {
        power *= zl;
        const auto [inv_gamma, log_gamma] = coeff(k);
        long double term;
        if (inv_gamma != 0.0L && std::isfinite(power)) {
            term = power * inv_gamma;
        } else {
            term = std::exp(k * log_abs_z - log_gamma);
            if (z < 0.0 && (k % 2 == 1)) term = -term;
        }
        if (!std::isfinite(term)) {
            throw ConvergenceError("Mittag-Leffler series diverged", static_cast<double>(sum + carry), k);
        }
        const long double next = sum + term;
        carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
        sum = next;
        const long double magnitude = std::abs(term);
        if (magnitude <= kRelativeStop * std::abs(sum + carry) && magnitude <= previous) {
            return static_cast<double>(sum + carry);
        }
        previous = magnitude;
    }
    throw ConvergenceError("Mittag-Leffler series did not converge within the term cap",
                           static_cast<double>(sum + carry), kTermCap);
}

std::pair<long double, long double> series_coefficient(double beta, int k) {
    const long double x = static_cast<long double>(beta) * k + 1.0L;
    const long double lg = std::lgamma(x);
    const long double inv = x <= kGammaDirectLimit ? 1.0L / std::tgamma(x) : 0.0L;
    return {inv, lg};
}

constexpr std::array<std::uint64_t, kHermiteMaxDegree + 1> make_factorials() {
    std::array<std::uint64_t, kHermiteMaxDegree + 1> table{};
    table[0] = 1;
    for (int i = 1; i <= kHermiteMaxDegree; ++i) table[i] = table[i - 1] * static_cast<std::uint64_t>(i);
    return table;
}

constexpr auto kFactorials = make_factorials();

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) throw DomainError("gamma requires x > 0, got " + std::to_string(x));
    return std::tgamma(x);
}

double mittag_leffler(const MLParams& p) {
    check_order(p.beta);
    return ml_series(p.arg, [&](int k) { return series_coefficient(p.beta, k); });
}

MittagLeffler::MittagLeffler(double beta) : beta_(beta) {
    check_order(beta);
    log_gamma_.resize(kTermCap);
    inv_gamma_.resize(kTermCap);
    for (int k = 0; k < kTermCap; ++k) {
        std::tie(inv_gamma_[k], log_gamma_[k]) = series_coefficient(beta, k);
    }
}

double MittagLeffler::operator()(double z) const {
    return ml_series(z, [&](int k) { return std::pair{inv_gamma_[k], log_gamma_[k]}; });
}

double hermite_gen(const HermiteArgs& a) {
    if (a.n < 0) throw DomainError("Hermite degree must be nonnegative");
    if (a.n > kHermiteMaxDegree) {
        throw CapError("Hermite degree " + std::to_string(a.n) + " exceeds the factorial table (max " +
                       std::to_string(kHermiteMaxDegree) + ")");
    }
    CompensatedSum sum;
    for (int r = 0; 2 * r <= a.n; ++r) {
        // n!/((n−2r)! r!) is an integer: a product of 2r consecutive integers
        // is divisible by (2r)! and hence by r!.
        const std::uint64_t coeff = kFactorials[a.n] / kFactorials[a.n - 2 * r] / kFactorials[r];
        sum.add(static_cast<double>(coeff) * std::pow(a.hval, r) * std::pow(a.fval, a.n - 2 * r));
    }
    return sum.value();
}

}  // namespace opburgers::specialfn
