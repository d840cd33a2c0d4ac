#pragma once

#include "hoheat/core.hpp"
#include "hoheat/special.hpp"

namespace hoheat {

/// Law of the folded fractional-advection solution q_alpha(., t) on (0, inf).
struct FracLaw {
    double alpha = 0.5;  // in (0, 1)
    double t = 1.0;

    static FracLaw of(double alpha, double t);
};

/// q_alpha(x,t) = (1/(pi t^alpha)) sum_r (-x/t^alpha)^r Gamma(alpha(r+1))
///                sin(pi alpha (r+1)) / r!.
/// Far outside the certifiable range the value is returned as 0 whenever the
/// analytic tail bound pins it below ~1e-8; otherwise Errc::range is thrown.
SeriesEval q_alpha_density_eval(double alpha, double x, double t,
                                const NumericControls& c = {});
double q_alpha_density(double alpha, double x, double t);

/// Fundamental solution of the fractional diffusion equation
/// d^nu u/dt^nu = lambda^2 d^2 u/dx^2 through the gamma-sine form of the
/// Wright series,
///   u_nu(x,t) = (1/(2 pi lambda t^{nu/2})) sum_k (-|x|/(lambda t^{nu/2}))^k
///               Gamma(nu(1+k)/2) sin(pi nu (1+k)/2) / k!.
/// nu = 1 reduces to the heat kernel with diffusivity lambda^2; the fold
/// 2 u_{2 alpha} equals q_alpha.  nu in (1, 2) is evaluated as a function
/// without probabilistic claims.
SeriesEval wright_fractional_density_eval(double nu, double lambda_scale, double x,
                                          double t, const NumericControls& c = {});
double wright_fractional_density(double nu, double lambda_scale, double x, double t);

/// int_0^inf e^{-lambda x} q_alpha(x,t) dx = E_{alpha,1}(-lambda t^alpha).
double laplace_x_q(double alpha, double lambda, double t);

/// int_0^inf e^{-mu t} q_alpha(x,t) dt = mu^{alpha-1} e^{-x mu^alpha}.
double laplace_t_q(double alpha, double mu, double x);

/// Double transform mu^{alpha-1} / (mu^alpha + lambda).
double double_laplace_q(double alpha, double lambda, double mu);

/// Residual |D^alpha_t q + d_x q| at (x, t) with the Caputo derivative
/// discretized by the L1 scheme on a uniform grid of step h over [0, t].
double caputo_residual(double alpha, double x, double t, double h);

}  // namespace hoheat
