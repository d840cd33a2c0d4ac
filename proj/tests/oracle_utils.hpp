#pragma once

// Test-side oracles, independent of the library implementation paths they
// check.  Everything here is long-double brute force.

#include <cmath>

namespace oracle {

// Gamma by Stirling's series at shifted argument plus downward recurrence.
// Relative error well below 1e-16 on [0.05, 60].
inline long double gamma_ld(long double x) {
    int shifts = 0;
    while (x < 30.0L) {
        ++shifts;
        x += 1.0L;
    }
    // Stirling with Bernoulli terms
    const long double b[] = {
        1.0L / 12, -1.0L / 360, 1.0L / 1260, -1.0L / 1680, 1.0L / 1188,
        -691.0L / 360360, 1.0L / 156, -3617.0L / 122400,
    };
    long double z = 1.0L / (x * x);
    long double series = 0.0L;
    for (int i = 7; i >= 0; --i) series = series * z + b[i];
    series /= x;
    const long double half_log_2pi = 0.91893853320467274178032973640561764L;
    long double lg = (x - 0.5L) * std::log(x) - x + half_log_2pi + series;
    long double g = std::exp(lg);
    for (int i = 1; i <= shifts; ++i) g /= (x - i);
    return g;
}

inline double gamma_oracle(double x) { return static_cast<double>(gamma_ld(x)); }

// Airy Ai through the gamma-sine Maclaurin series in long double.
inline double airy_series_oracle(double w, int terms = 140) {
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double z = std::cbrt(3.0L) * static_cast<long double>(w);
    long double zk = 1.0L;  // z^k / k!
    long double sum = 0.0L;
    for (int k = 0; k < terms; ++k) {
        const int r = (k + 1) % 3;
        if (r != 0) {
            const long double s = (r == 1 ? 0.5L : -0.5L) * std::sqrt(3.0L);
            sum += zk * s * gamma_ld((k + 1) / 3.0L);
        }
        zk *= z / (k + 1);
    }
    return static_cast<double>(std::pow(3.0L, -2.0L / 3.0L) / pi * sum);
}

// Partial sum of sum_k x^k sin(phi k)/k!.
inline double osc_series_oracle(double x, double phi, int terms) {
    long double sum = 0.0L;
    long double xk = 1.0L;
    for (int k = 0; k < terms; ++k) {
        sum += xk * std::sin(static_cast<long double>(phi) * k);
        xk *= static_cast<long double>(x) / (k + 1);
    }
    return static_cast<double>(sum);
}

// Mittag-Leffler partial sum in long double.
inline double ml_series_oracle(double alpha, double beta, double z, int terms = 400) {
    long double sum = 0.0L;
    long double zk = 1.0L;
    for (int k = 0; k < terms; ++k) {
        const long double g = static_cast<long double>(alpha) * k + beta;
        if (g > 1700.0L) break;
        sum += zk / gamma_ld(g);
        zk *= z;
    }
    return static_cast<double>(sum);
}

// CDF of the positively skewed 1/2-stable law with Laplace transform
// exp(-sqrt(lambda) t): erfc(t / (2 sqrt(x))).
inline double levy_cdf(double x, double t) {
    return x <= 0.0 ? 0.0 : std::erfc(0.5 * t / std::sqrt(x));
}

inline double levy_density(double x, double t) {
    return t / (2.0 * std::sqrt(M_PI)) * std::pow(x, -1.5) * std::exp(-t * t / (4.0 * x));
}

inline double gaussian_heat_kernel(double x, double t) {
    return std::exp(-x * x / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
}

}  // namespace oracle
