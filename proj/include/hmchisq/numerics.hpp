#pragma once

#include <functional>
#include <stdexcept>

namespace hmchisq {

/// A probability value validated to lie in [0, 1].
///
/// Converts implicitly from/to double so it composes with ordinary
/// arithmetic; construction throws std::domain_error on invalid input.
class Probability {
public:
    Probability(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw std::domain_error("probability outside [0, 1]");
    }
    operator double() const noexcept { return value_; }
    double value() const noexcept { return value_; }

    /// Clamp a computed value into [0, 1] (absorbs roundoff like -1e-17).
    static Probability clamped(double value) noexcept {
        if (value < 0.0) value = 0.0;
        if (value > 1.0) value = 1.0;
        return Probability(value, 0);
    }

private:
    Probability(double value, int) noexcept : value_(value) {}
    double value_;
};

/// Standard normal distribution function Phi(x).
double normal_cdf(double x) noexcept;

/// Standard normal upper tail 1 - Phi(x), accurate for large x.
double normal_sf(double x) noexcept;

/// Standard normal density.
double normal_pdf(double x) noexcept;

/// Standard normal quantile Phi^{-1}(p) for p in (0, 1).
/// Rational approximation refined by one Halley step; relative error is
/// a few ulps across the full range, including far tails.
double normal_quantile(double p);

/// Survival function of the chi-squared distribution with df >= 1
/// degrees of freedom, via the regularized incomplete gamma function.
double chisq_sf(double x, int df);

/// Quantile of the chi-squared distribution: chisq_sf(result, df) == 1 - p.
double chisq_quantile(double p, int df);

/// Regularized upper incomplete gamma function Q(a, x), a > 0, x >= 0.
double gamma_q(double a, double x);

/// Bracketed root finding: bisection with secant acceleration.
///
/// f(lo) and f(hi) must differ in sign. Deterministic; iteration cap 200.
/// Returns a point whose final bracket has width <= tol (or the exact root
/// if one is hit). Throws std::invalid_argument for an invalid bracket and
/// std::runtime_error (reporting the best bracket) on non-convergence.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-10);

}  // namespace hmchisq
