// Part of atcf-sim, an aerial-terrestrial cell-free massive MIMO toolkit.
// SPDX-License-Identifier: Apache-2.0

#ifndef ATCF_MATH_SPECIAL_HPP
#define ATCF_MATH_SPECIAL_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace atcf {

// Bessel function of the first kind, order zero.
//
// Power series below |x| = 12, Hankel asymptotic expansion beyond; the
// crossover keeps the absolute error under 1e-10 everywhere on |x| <= 20
// (the series alone loses a digit past ~16 to cancellation, the asymptotic
// series alone cannot reach 1e-10 below ~10).
inline double bessel_j0(double x) {
    if (!std::isfinite(x)) throw std::domain_error("bessel_j0: non-finite argument");
    const double ax = std::fabs(x);
    if (ax < 12.0) {
        const double q = -0.25 * ax * ax;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= q / (static_cast<double>(k) * static_cast<double>(k));
            sum += term;
            if (std::fabs(term) < 1e-19 * std::fabs(sum)) break;
        }
        return sum;
    }
    // J0(x) ~ sqrt(2/(pi x)) [P(x) cos(x - pi/4) - Q(x) sin(x - pi/4)],
    // P and Q summed to their smallest term.
    const double inv8x = 1.0 / (8.0 * ax);
    double p = 1.0, q = 0.0;
    double num = 1.0;      // product of (2j-1)^2
    double fact = 1.0;     // n!
    double pw = 1.0;       // (8x)^-n
    double prev = 1e300;
    for (int n = 1; n <= 16; ++n) {
        const double odd = 2.0 * n - 1.0;
        num *= odd * odd;
        fact *= n;
        pw *= inv8x;
        const double term = num / fact * pw;
        if (term > prev) break;  // asymptotic series started diverging
        prev = term;
        if (n % 2 == 0)
            p += (n % 4 == 0 ? term : -term);
        else
            q += ((n - 1) % 4 == 0 ? -term : term);
    }
    const double chi = ax - 0.25 * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * ax)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Gaussian tail probability Q(x) = P(N(0,1) > x), evaluated through the
// complementary error function for stable far tails.
inline double q_func(double x) {
    if (!std::isfinite(x)) throw std::domain_error("q_func: non-finite argument");
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return 0.5 * std::erfc(x * inv_sqrt2);
}

// Standard normal density.
inline double normal_pdf(double x) {
    constexpr double inv_sqrt_2pi = 0.39894228040143267794;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// Inverse of q_func on (0, 1). Bisection to a tight bracket, then Newton
// polish; monotone decreasing in eps.
inline double q_inv(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("q_inv: eps outside (0,1)");
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (q_func(mid) > eps)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        const double f = q_func(x) - eps;
        const double d = normal_pdf(x);
        if (d <= 0.0) break;
        const double step = f / d;
        if (!std::isfinite(step)) break;
        x += step;
    }
    return x;
}

}  // namespace atcf

#endif
