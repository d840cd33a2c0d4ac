#include "hoheat/special.hpp"

#include <array>
#include <cstdio>
#include <cmath>
#include <limits>

#include "hoheat/quadrature.hpp"

namespace hoheat {
namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kEps = 2.220446049250313e-16;

// Lanczos g = 7, n = 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double gamma_positive(double x) {
    // x >= 0.5.  The power is split so the intermediate stays representable
    // up to the overflow threshold of Gamma itself (x ~ 171.6).
    double acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x - 1.0 + k);
    const double t = x + 6.5;
    const double half_pow = std::pow(t, 0.5 * (x - 0.5));
    return std::sqrt(2.0 * kPi) * (half_pow * std::exp(-t)) * half_pow * acc;
}

}  // namespace

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x))
        raise(Errc::pole, "gamma_fn: pole at nonpositive integer");
    if (x >= 0.5) return gamma_positive(x);
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
}

double osc_kernel(double x, double phi) {
    return std::exp(x * std::cos(phi)) * std::sin(x * std::sin(phi));
}

namespace {

SeriesEval airy_series(double w) {
    // Ai(w) = 3^{-2/3}/pi sum_k (3^{1/3} w)^k sin(2pi(k+1)/3) Gamma((k+1)/3)/k!
    // Every third term (k = 2 mod 3) vanishes; sin takes values +-sqrt(3)/2.
    const double z = std::cbrt(3.0) * w;
    const double front = std::pow(3.0, -2.0 / 3.0) / kPi;
    const double half_sqrt3 = 0.5 * std::sqrt(3.0);

    KahanSum sum;
    double zk = 1.0;  // z^k / k!
    double max_mag = 0.0;
    int terms = 0;
    double tail = 0.0;
    for (int k = 0; k < 220; ++k) {
        const int r = (k + 1) % 3;
        if (r != 0) {
            const double s = (r == 1) ? half_sqrt3 : -half_sqrt3;
            const double term = zk * s * gamma_fn((k + 1) / 3.0);
            sum.add(term);
            max_mag = std::max(max_mag, std::fabs(term));
            ++terms;
            tail = std::fabs(term);
        }
        zk *= z / (k + 1);
        if (k > 8 && std::fabs(zk) * gamma_fn((k + 2) / 3.0) < 1e-18 * std::max(1.0, max_mag)) {
            tail = std::fabs(zk) * gamma_fn((k + 2) / 3.0);
            break;
        }
    }
    SeriesEval out;
    out.value = front * sum.value();
    out.terms_used = terms;
    out.truncation_bound = front * (tail + max_mag * kEps * terms);
    return out;
}

// Coefficients u_k of the Airy asymptotic expansions: u_0 = 1,
// u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)).
const double* airy_asym_coeffs() {
    static const auto table = [] {
        std::array<double, 28> u{};
        u[0] = 1.0;
        for (int k = 1; k < 28; ++k)
            u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
                   (216.0 * k * (2.0 * k - 1.0));
        return u;
    }();
    return table.data();
}

SeriesEval airy_asymptotic(double w) {
    const double* u = airy_asym_coeffs();

    SeriesEval out;
    const double z = std::fabs(w);
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double root4 = std::pow(z, 0.25);

    if (w > 0) {
        // Ai(w) = e^{-zeta} / (2 sqrt(pi) w^{1/4}) sum (-1)^k u_k zeta^{-k}
        double sum = 0.0, last = std::numeric_limits<double>::max();
        int k = 0;
        for (; k < 28; ++k) {
            const double term = ((k % 2) ? -1.0 : 1.0) * u[k] / std::pow(zeta, k);
            if (std::fabs(term) > last) break;  // divergent tail reached
            sum += term;
            last = std::fabs(term);
            if (last < 1e-18 * std::fabs(sum)) {
                ++k;
                break;
            }
        }
        const double front = std::exp(-zeta) / (2.0 * std::sqrt(kPi) * root4);
        out.value = front * sum;
        out.terms_used = k;
        out.truncation_bound = front * last;
    } else {
        // Ai(-z) = (cos(zeta - pi/4) P + sin(zeta - pi/4) Q) / (sqrt(pi) z^{1/4}),
        // P = sum (-1)^k u_{2k} zeta^{-2k}, Q = sum (-1)^k u_{2k+1} zeta^{-2k-1}.
        double p = 0.0, q = 0.0;
        double lastp = std::numeric_limits<double>::max();
        double lastq = 0.0;
        int k = 0;
        for (; 2 * k + 1 < 28; ++k) {
            const double sign = (k % 2) ? -1.0 : 1.0;
            const double tp = sign * u[2 * k] / std::pow(zeta, 2 * k);
            const double tq = sign * u[2 * k + 1] / std::pow(zeta, 2 * k + 1);
            if (std::fabs(tp) > lastp) break;
            p += tp;
            q += tq;
            lastp = std::fabs(tp);
            lastq = std::fabs(tq);
            if (lastp < 1e-18) {
                ++k;
                break;
            }
        }
        const double front = 1.0 / (std::sqrt(kPi) * root4);
        const double phase = zeta - 0.25 * kPi;
        out.value = front * (std::cos(phase) * p + std::sin(phase) * q);
        out.terms_used = 2 * k;
        out.truncation_bound = front * (lastp + lastq);
    }
    return out;
}

}  // namespace

SeriesEval airy_ai_eval(double w) {
    if (std::fabs(w) <= 6.0) return airy_series(w);
    return airy_asymptotic(w);
}

double airy_ai(double w) { return airy_ai_eval(w).value; }

SeriesEval mittag_leffler_eval(double alpha, double beta, double z, double abs_tol,
                               int max_terms) {
    if (alpha < 0.0) {
        // Only the reflection identity E_{-a,1-a}(z) = -(1/z) E_{a,1}(1/z).
        const double a = -alpha;
        if (std::fabs(beta - (1.0 - a)) > 1e-12)
            raise(Errc::invalid_argument,
                  "mittag_leffler: negative alpha admitted only with beta = 1 - |alpha|");
        if (z == 0.0) raise(Errc::invalid_argument, "mittag_leffler: z = 0 in reflection");
        SeriesEval inner = mittag_leffler_eval(a, 1.0, 1.0 / z, abs_tol, max_terms);
        inner.value = -inner.value / z;
        inner.truncation_bound = std::fabs(inner.truncation_bound / z);
        return inner;
    }
    if (alpha == 0.0 || beta <= 0.0)
        raise(Errc::invalid_argument, "mittag_leffler: need alpha > 0, beta > 0");

    // Ascending-k compensated summation.  The remainder after term k is
    // bounded through the Wendel-type ratio |t_{j+1}/t_j| <= 2|z|/(alpha j + beta)^alpha.
    KahanSum sum;
    double max_mag = 0.0;
    double zk = 1.0;  // z^k
    int k = 0;
    double remainder = std::numeric_limits<double>::infinity();
    for (; k < max_terms; ++k) {
        const double g = alpha * k + beta;
        if (g > 170.5) break;  // Gamma overflows double well before this matters
        const double term = zk / gamma_fn(g);
        if (!std::isfinite(term))
            raise(Errc::range, "mittag_leffler: series overflow before convergence");
        sum.add(term);
        max_mag = std::max(max_mag, std::fabs(term));
        zk *= z;
        // Wendel: Gamma(g+alpha)/Gamma(g) >= g^alpha (g/(g+alpha))^{1-alpha}.
        const double ratio = std::fabs(z) * (1.0 + alpha / g) / std::pow(g, alpha);
        if (ratio < 0.9) {
            const double gn = alpha * (k + 1) + beta;
            const double next = (gn > 170.5) ? 0.0 : std::fabs(zk) / gamma_fn(gn);
            remainder = next / (1.0 - ratio);
            if (remainder < 0.1 * abs_tol) {
                ++k;
                break;
            }
        }
    }
    SeriesEval out;
    out.value = sum.value();
    out.terms_used = k;
    const double cancellation = max_mag * kEps * std::max(4, k);
    out.truncation_bound = remainder + cancellation;
    if (!std::isfinite(out.truncation_bound) || out.truncation_bound > abs_tol) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "mittag_leffler: cannot certify %.1e at alpha=%g beta=%g z=%g "
                      "(bound %.2e after %d terms)",
                      abs_tol, alpha, beta, z, out.truncation_bound, k);
        raise(Errc::range, msg);
    }
    return out;
}

double mittag_leffler(double alpha, double beta, double z) {
    return mittag_leffler_eval(alpha, beta, z).value;
}

}  // namespace hoheat
