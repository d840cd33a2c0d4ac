#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hoheat/core.hpp"

namespace hoheat {

/// Fundamental solution u_{2n+1}(x,t) of the odd-order equation through the
/// damped-oscillation integral
///   (2n+1) t / (pi x) * int_0^inf e^{-b x w} sin(a x w) w^{2n} e^{-t w^{2n+1}} dw,
/// truncated where t w^{2n+1} - b|x|w exceeds the cutoff.  x = 0 returns the
/// closed-form origin value.
EvalResult u_odd_damped_eval(int n, double x, double t, const NumericControls& c = {});
double u_odd_damped(int n, double x, double t, const NumericControls& c = {});

/// Odd-order series
///   u_{2n+1}(x,t) = -(1/(pi x)) sum_{k>=1} (-x t^{-1/(2n+1)})^k
///                   sin(n pi k/(2n+1)) Gamma(1 + k/(2n+1)) / k!.
/// Throws Errc::method_range beyond the cancellation threshold
/// |x| / t^{1/(2n+1)} > 8.
EvalResult u_odd_series_eval(int n, double x, double t, const NumericControls& c = {});
double u_odd_series(int n, double x, double t, const NumericControls& c = {});

/// Even-order damped representation
///   2 n t / (pi x) * int_0^inf b^{2n-1} e^{-t b^{2n}} sin(b x) db,
/// with the origin value Gamma(1 + 1/2n) / (pi t^{1/2n}).
EvalResult u_even_damped_eval(int n, double x, double t, const NumericControls& c = {});
double u_even_damped(int n, double x, double t, const NumericControls& c = {});

/// Slow reference route via Fourier inversion.  Even m integrates
/// (1/pi) int e^{-t b^{2n}} cos(b x) db directly; odd m evaluates
/// (1/pi) int cos(b x + t b^{2n+1}) db with an exponential mollifier
/// e^{-eps b}, eps in {1e-2, 5e-3, 2.5e-3}, extrapolated to eps = 0.
EvalResult u_fourier_oracle_eval(const EquationOrder& order, double x, double t,
                                 const NumericControls& c = {});
double u_fourier_oracle(const EquationOrder& order, double x, double t,
                        const NumericControls& c = {});

/// Third-order closed form u_3(x,t) = (3t)^{-1/3} Ai(x (3t)^{-1/3}).
double u3_airy(double x, double t);

/// Biquadratic series, normalized to the symbol e^{-t b^4}:
///   u_4(x,t) = (1/(4 pi t^{1/4})) sum_k (-1)^k (x^2/sqrt(t))^k
///              Gamma(k/2 + 1/4) / (2k)!.
EvalResult u4_series_eval(double x, double t, const NumericControls& c = {});
double u4_series(double x, double t, const NumericControls& c = {});

/// Closed-form origin value u_m(0,t): odd orders
/// sin(n pi/(2n+1)) Gamma(1 + 1/(2n+1)) / (pi t^{1/(2n+1)}), even orders
/// Gamma(1 + 1/2n) / (pi t^{1/2n}).  Both tend to 1/pi as m grows.
double u_origin(const EquationOrder& order, double t);

struct MassResult {
    double value = 0.0;
    double abs_err = 0.0;
    bool tail_bound_met = false;
    double tail_bound = 0.0;
    int nodes = 0;
};

/// int_0^inf u_m(x,t) dx.  Odd orders converge to (1/2)(1 - 1/(2n+1))
/// independently of t; even orders to 1/2.
MassResult mass_positive_halfline(const EquationOrder& order, double t,
                                  const NumericControls& c = {});

/// Extra third-order solution family f_m(x,t) = (x/t)^m u_3(x,t).
double f_m_eval(int m_exp, double x, double t);

/// |d_t field - kappa_m d_x^m field| at (x, t) by central finite differences:
/// 5-point O(h^4) in t, (m+2)-point O(h^2) in x (5-point for d^3, 7-point
/// for d^5).
double pde_residual(const EquationOrder& order,
                    const std::function<double(double, double)>& field, double x,
                    double t, double h);

/// Point evaluation with an explicit method choice; auto_select uses the
/// series inside |x|/t^{1/m} <= 8 and the Airy/damped route outside.
EvalResult evaluate_point(const EquationOrder& order, double x, double t,
                          Method method, const NumericControls& c = {});

struct PointOutcome {
    bool ok = false;
    EvalResult result;
    Errc code = Errc::numeric;
    std::string message;
};

/// Grid evaluation; per-point range failures are reported in the outcome
/// rather than thrown.
std::vector<PointOutcome> evaluate(const EvalRequest& request);

}  // namespace hoheat
