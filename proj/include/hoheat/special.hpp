#pragma once

#include "hoheat/core.hpp"

namespace hoheat {

/// Value of a truncated series together with the bound used to certify it.
struct SeriesEval {
    double value = 0.0;
    int terms_used = 0;
    double truncation_bound = 0.0;  // >= |first omitted term| plus rounding allowance
};

/// Real gamma function.  Relative error <= 1e-13 on [0.1, 50]; poles at
/// nonpositive integers throw Errc::pole.
double gamma_fn(double x);

/// Damped oscillation kernel g(x, phi) = e^{x cos phi} sin(x sin phi)
/// (= sum_k x^k sin(phi k) / k!).  Returns the closed form.
double osc_kernel(double x, double phi);

/// Airy function Ai on the real line.  |w| <= 6 uses the Maclaurin-type
/// series Ai(w) = 3^{-2/3}/pi * sum_k (3^{1/3} w)^k sin(2pi(k+1)/3)
/// Gamma((k+1)/3) / k!; larger |w| switches to the asymptotic expansions,
/// which keep the absolute error below ~1e-10 at the crossover and improve
/// rapidly away from it.
SeriesEval airy_ai_eval(double w);
double airy_ai(double w);

/// Mittag-Leffler function E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta)
/// for alpha > 0, beta > 0, by direct compensated summation; throws
/// Errc::range when the truncation/cancellation bound cannot certify
/// abs_tol.  A negative first parameter is admitted only through the
/// reflection identity E_{-a,1-a}(z) = -(1/z) E_{a,1}(1/z).
SeriesEval mittag_leffler_eval(double alpha, double beta, double z,
                               double abs_tol = 1e-10, int max_terms = 2000);
double mittag_leffler(double alpha, double beta, double z);

}  // namespace hoheat
