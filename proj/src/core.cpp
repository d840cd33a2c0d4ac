#include "hoheat/core.hpp"

#include <cmath>

#include "hoheat/special.hpp"

namespace hoheat {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

EquationOrder EquationOrder::of(int m) {
    if (m < 2) raise(Errc::invalid_order, "EquationOrder: m must be >= 2");
    EquationOrder o;
    o.m = m;
    if (m % 2 == 1) {
        o.parity = Parity::odd;
        o.n = (m - 1) / 2;
        o.kappa = (o.n % 2 == 0) ? 1 : -1;  // (-1)^n
        const double phi = kPi / (2.0 * m);
        o.a = std::cos(phi);
        o.b = std::sin(phi);
    } else {
        o.parity = Parity::even;
        o.n = m / 2;
        o.kappa = (o.n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
        o.a = 1.0;
        o.b = 0.0;
    }
    return o;
}

DerivedConstants derive_constants(int m) {
    const EquationOrder o = EquationOrder::of(m);
    return DerivedConstants{o.a, o.b, o.kappa};
}

GenGammaLaw GenGammaLaw::of(double gamma, double t) {
    if (!(gamma > 0.0) || !(t > 0.0))
        raise(Errc::invalid_argument, "GenGammaLaw: gamma and t must be positive");
    return GenGammaLaw{gamma, t};
}

double GenGammaLaw::density(double x) const {
    if (x <= 0.0) return 0.0;
    return gamma * std::pow(x, gamma - 1.0) / t * std::exp(-std::pow(x, gamma) / t);
}

double GenGammaLaw::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-std::pow(x, gamma) / t);
}

double GenGammaLaw::moment(double k) const {
    return std::pow(t, k / gamma) * gamma_fn(1.0 + k / gamma);
}

SkewScale skew_scale_from_nu(double alpha, double nu) {
    if (alpha == 1.0)
        raise(Errc::invalid_argument, "skew_scale_from_nu: alpha = 1 has no theta form");
    return SkewScale{std::tan(kPi * nu / 2.0) / std::tan(kPi * alpha / 2.0),
                     std::cos(kPi * nu / 2.0)};
}

double nu_from_skew(double alpha, double theta) {
    if (alpha == 1.0)
        raise(Errc::invalid_argument, "nu_from_skew: alpha = 1 has no theta form");
    return 2.0 / kPi * std::atan(theta * std::tan(kPi * alpha / 2.0));
}

StableLaw StableLaw::of(double alpha, double nu, double t) {
    if (!(alpha > 0.0) || alpha > 2.0)
        raise(Errc::invalid_argument, "StableLaw: alpha must lie in (0, 2]");
    if (!(t > 0.0)) raise(Errc::invalid_time, "StableLaw: t must be positive");
    const double nu_max = std::min(alpha, 2.0 - alpha);
    if (std::fabs(nu) > nu_max + 1e-14)
        raise(Errc::invalid_argument, "StableLaw: |nu| must not exceed min(alpha, 2-alpha)");
    StableLaw law;
    law.alpha = alpha;
    law.nu = nu;
    law.t = t;
    law.sigma = std::cos(kPi * nu / 2.0);
    // theta -> 0 as alpha -> 1 for fixed nu; the nu-form stays authoritative.
    law.theta = (alpha == 1.0) ? 0.0 : skew_scale_from_nu(alpha, nu).theta;
    return law;
}

void NumericControls::validate() const {
    if (!(series_rel_tol > 0.0) || !(quad_abs_tol > 0.0) || !(quad_cutoff_decades > 0.0))
        raise(Errc::invalid_argument, "NumericControls: tolerances must be positive");
    if (series_max_terms < 10)
        raise(Errc::invalid_argument, "NumericControls: series_max_terms must be >= 10");
    if (mc_samples < 1)
        raise(Errc::invalid_argument, "NumericControls: mc_samples must be >= 1");
}

const char* kernel_method_name(KernelMethod m) {
    switch (m) {
        case KernelMethod::odd_series: return "odd_series";
        case KernelMethod::odd_damped: return "odd_damped";
        case KernelMethod::even_damped: return "even_damped";
        case KernelMethod::fourier_oracle: return "fourier_oracle";
        case KernelMethod::airy_closed: return "airy_closed";
        case KernelMethod::biquadratic_series: return "biquadratic_series";
        case KernelMethod::origin_closed_form: return "origin_closed_form";
    }
    return "unknown";
}

}  // namespace hoheat
