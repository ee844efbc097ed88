#pragma once

// Special functions and the monotone root finder backing the Normal and Gamma
// distributions: standard-normal CDF via erfc, regularized lower incomplete
// gamma via power series / Lentz continued fraction.

#include <cmath>
#include <limits>
#include <numbers>

#include "heavytail/errors.hpp"

namespace heavytail {

inline double normal_cdf(double z) {
    // Phi(z) = erfc(-z / sqrt(2)) / 2, accurate in both tails.
    return 0.5 * std::erfc(-z / std::numbers::sqrt2_v<double>);
}

namespace detail {

// Series expansion of P(a,x), effective for x < a + 1.
inline double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x) = 1 - P(a,x) (modified Lentz),
// effective for x >= a + 1.
inline double gamma_q_contfrac(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace detail

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
inline double gamma_p(double a, double x) {
    if (!(a > 0.0))
        throw domain_error("gamma_p: shape must be positive");
    if (x <= 0.0)
        return 0.0;
    if (x < a + 1.0)
        return detail::gamma_p_series(a, x);
    return 1.0 - detail::gamma_q_contfrac(a, x);
}

// Solves f(x) = target for continuous nondecreasing f by bisection on [lo, hi].
// The bracket must already satisfy f(lo) <= target <= f(hi).
template <class F>
double solve_monotone(F&& f, double lo, double hi, double target,
                      double x_tol = 1e-12, int max_iter = 200) {
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // bracket exhausted at double precision
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= x_tol * std::max(1.0, std::fabs(mid)))
            break;
    }
    return 0.5 * (lo + hi);
}

// Standard-normal quantile by expanding-bracket bisection on normal_cdf.
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw domain_error("normal_quantile: p must lie in (0,1)");
    double hi = 1.0;
    while (normal_cdf(hi) < p && hi < 1e3)
        hi *= 2.0;
    double lo = -1.0;
    while (normal_cdf(lo) > p && lo > -1e3)
        lo *= 2.0;
    return solve_monotone(normal_cdf, lo, hi, p);
}

} // namespace heavytail
