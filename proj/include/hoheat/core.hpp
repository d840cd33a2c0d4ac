#pragma once

#include <cstdint>
#include <vector>

#include "hoheat/errors.hpp"

namespace hoheat {

enum class Parity { odd, even };

/// Order of the spatial derivative in du/dt = kappa_m d^m u / dx^m together
/// with the constants of the damped-oscillation representation.
///
/// Odd orders m = 2n+1 use the branch du/dt = (-1)^n d^{2n+1}u/dx^{2n+1},
/// whose Fourier transform (under the e^{i beta x} convention) is
/// exp(-i t beta^{2n+1}).  Even orders m = 2n carry kappa = (-1)^{n+1} so the
/// symbol is exp(-t beta^{2n}).  The mirror odd equation is x -> -x.
struct EquationOrder {
    int m = 2;
    Parity parity = Parity::even;
    int n = 1;       // m = 2n+1 (odd) or m = 2n (even)
    int kappa = 1;   // sign of the leading coefficient
    double a = 1.0;  // cos(pi / (2(2n+1))) for odd m, 1 for even m
    double b = 0.0;  // sin(pi / (2(2n+1))) for odd m, 0 for even m

    static EquationOrder of(int m);

    bool odd() const { return parity == Parity::odd; }
};

/// Same as EquationOrder::of; kept as a free function for call sites that
/// only need the (a, b, kappa) triple.
struct DerivedConstants {
    double a;
    double b;
    int kappa;
};
DerivedConstants derive_constants(int m);

/// Generalized gamma law with density gamma * x^{gamma-1} / t * exp(-x^gamma/t)
/// on (0, inf).
struct GenGammaLaw {
    double gamma = 1.0;  // shape exponent
    double t = 1.0;      // scale-time

    static GenGammaLaw of(double gamma, double t);

    double density(double x) const;
    double cdf(double x) const;
    /// E[X^k] = t^{k/gamma} * Gamma(1 + k/gamma), k >= 0.
    double moment(double k) const;
};

/// Skewness/scale pair of the stable characteristic function written as
/// exp[-sigma t |b|^alpha (1 - i theta sgn(b) tan(pi alpha/2))].
struct SkewScale {
    double theta;
    double sigma;
};

/// theta = tan(pi nu/2) / tan(pi alpha/2), sigma = cos(pi nu/2).
/// Owns the bridge between the (alpha, nu) and (theta, sigma) conventions;
/// requires alpha != 1 for theta (the nu-form stays valid at alpha = 1).
SkewScale skew_scale_from_nu(double alpha, double nu);
double nu_from_skew(double alpha, double theta);

/// Stable law in the oscillation-index parameterization: the characteristic
/// function exponent is -t |b|^alpha e^{-i (pi nu / 2) sgn(b)}.
struct StableLaw {
    double alpha = 2.0;  // stability index in (0, 2]
    double nu = 0.0;     // oscillation index, |nu| <= min(alpha, 2 - alpha)
    double theta = 0.0;  // asymmetry, derived
    double sigma = 1.0;  // scale cos(pi nu / 2), derived
    double t = 1.0;      // time

    static StableLaw of(double alpha, double nu, double t);
};

/// Tolerances and budgets shared by the evaluators.
struct NumericControls {
    double series_rel_tol = 1e-12;
    int series_max_terms = 400;
    double quad_abs_tol = 1e-10;
    double quad_cutoff_decades = 40.0;  // integrate w while t*w^m - b|x|w <= this
    std::int64_t mc_samples = 1000000;
    std::uint64_t rng_seed = 0x9e3779b97f4a7c15ull;

    void validate() const;
};

/// Evaluation route actually used for a point.
enum class KernelMethod {
    odd_series,
    odd_damped,
    even_damped,
    fourier_oracle,
    airy_closed,
    biquadratic_series,
    origin_closed_form,
};

const char* kernel_method_name(KernelMethod m);

/// Method selector exposed to callers; auto_select picks series inside the
/// cancellation threshold and a quadrature (or Airy) route outside it.
enum class Method { series, damped, fourier, airy, auto_select };

struct EvalPoint {
    double x;
    double t;
};

struct EvalRequest {
    EquationOrder order;
    std::vector<EvalPoint> points;
    Method method = Method::auto_select;
    NumericControls controls;
};

struct EvalResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
    KernelMethod method_used = KernelMethod::fourier_oracle;
    int terms_or_nodes = 0;
};

}  // namespace hoheat
