#include "hoheat/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hoheat/quadrature.hpp"
#include "hoheat/special.hpp"

namespace hoheat {
namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kEps = 2.220446049250313e-16;

// Cancellation threshold of the power series in |x| / t^{1/m}.
constexpr double kSeriesRange = 8.0;

void require_time(double t) {
    if (!(t > 0.0)) raise(Errc::invalid_time, "t must be positive");
}

// Upper integration limit W with t W^m - growth*W >= decades, W >= (decades/t)^{1/m}.
double damped_cutoff(double t, int m, double growth, double decades) {
    double w = std::pow(decades / t, 1.0 / m);
    if (growth > 0.0) {
        while (t * std::pow(w, m) - growth * w < decades) w *= 1.25;
    }
    return w;
}

double origin_value(const EquationOrder& order, double t) {
    if (order.odd()) {
        const int m = order.m;
        return std::sin(order.n * kPi / m) * gamma_fn(1.0 + 1.0 / m) /
               (kPi * std::pow(t, 1.0 / m));
    }
    const int twon = order.m;
    return gamma_fn(1.0 + 1.0 / twon) / (kPi * std::pow(t, 1.0 / twon));
}

EvalResult origin_result(const EquationOrder& order, double t) {
    EvalResult r;
    r.value = origin_value(order, t);
    r.abs_err_estimate = 4.0 * kEps * std::fabs(r.value);
    r.method_used = KernelMethod::origin_closed_form;
    r.terms_or_nodes = 1;
    return r;
}

}  // namespace

EvalResult u_odd_damped_eval(int n, double x, double t, const NumericControls& c) {
    require_time(t);
    if (n < 1) raise(Errc::invalid_order, "u_odd_damped: n must be >= 1");
    const EquationOrder order = EquationOrder::of(2 * n + 1);
    if (x == 0.0) return origin_result(order, t);

    const int m = order.m;
    const double a = order.a;
    const double b = order.b;
    const double growth = (x < 0.0) ? b * (-x) : 0.0;
    const double cutoff = damped_cutoff(t, m, growth, c.quad_cutoff_decades);
    const double prefactor = m * t / (kPi * x);

    auto integrand = [&](double w) {
        return std::exp(-b * x * w - t * std::pow(w, m)) * std::sin(a * x * w) *
               std::pow(w, m - 1);
    };
    const double inner_tol = c.quad_abs_tol / std::max(std::fabs(prefactor), 1e-3);
    QuadResult q = integrate(integrand, 0.0, cutoff, inner_tol);

    EvalResult r;
    r.value = prefactor * q.value;
    r.abs_err_estimate = std::fabs(prefactor) * q.abs_err + std::exp(-c.quad_cutoff_decades);
    r.method_used = KernelMethod::odd_damped;
    r.terms_or_nodes = q.nodes;
    return r;
}

double u_odd_damped(int n, double x, double t, const NumericControls& c) {
    return u_odd_damped_eval(n, x, t, c).value;
}

EvalResult u_odd_series_eval(int n, double x, double t, const NumericControls& c) {
    require_time(t);
    if (n < 1) raise(Errc::invalid_order, "u_odd_series: n must be >= 1");
    const EquationOrder order = EquationOrder::of(2 * n + 1);
    if (x == 0.0) return origin_result(order, t);

    const int m = order.m;
    const double z = -x / std::pow(t, 1.0 / m);
    if (std::fabs(z) > kSeriesRange)
        raise(Errc::method_range,
              "u_odd_series: |x|/t^(1/m) beyond cancellation threshold; use the damped route");

    // sin(n pi k / m) is periodic in k with period 2m; tabulate exactly.
    std::vector<double> sin_table(2 * m);
    for (int r = 0; r < 2 * m; ++r) sin_table[r] = std::sin(n * kPi * r / m);

    KahanSum sum;
    double zk = 1.0;  // z^k / k!
    double max_mag = 0.0;
    double remainder = std::numeric_limits<double>::infinity();
    int k = 1;
    for (; k <= c.series_max_terms; ++k) {
        zk *= z / k;
        const double term = zk * sin_table[k % (2 * m)] * gamma_fn(1.0 + double(k) / m);
        sum.add(term);
        max_mag = std::max(max_mag, std::fabs(term));
        // |t_{k+1}/t_k| <= |z| (1 + (k+1)/m)^{1/m} / (k+1)
        const double ratio =
            std::fabs(z) * std::pow(1.0 + (k + 1.0) / m, 1.0 / m) / (k + 1.0);
        if (ratio < 0.5) {
            const double next = std::fabs(zk * z / (k + 1.0)) * gamma_fn(1.0 + (k + 1.0) / m);
            remainder = next / (1.0 - ratio);
            if (remainder <= c.series_rel_tol * std::max(std::fabs(sum.value()), max_mag * 1e-3)) {
                ++k;
                break;
            }
        }
    }

    const double prefactor = -1.0 / (kPi * x);
    EvalResult r;
    r.value = prefactor * sum.value();
    r.abs_err_estimate =
        std::fabs(prefactor) * (remainder + max_mag * kEps * k);
    r.method_used = KernelMethod::odd_series;
    r.terms_or_nodes = k;
    return r;
}

double u_odd_series(int n, double x, double t, const NumericControls& c) {
    return u_odd_series_eval(n, x, t, c).value;
}

EvalResult u_even_damped_eval(int n, double x, double t, const NumericControls& c) {
    require_time(t);
    if (n < 1) raise(Errc::invalid_order, "u_even_damped: n must be >= 1");
    const EquationOrder order = EquationOrder::of(2 * n);
    if (x == 0.0) return origin_result(order, t);

    const int m = order.m;  // 2n
    const double cutoff = damped_cutoff(t, m, 0.0, c.quad_cutoff_decades);
    const double prefactor = m * t / (kPi * x);

    auto integrand = [&](double beta) {
        return std::pow(beta, m - 1) * std::exp(-t * std::pow(beta, m)) * std::sin(beta * x);
    };
    const double inner_tol = c.quad_abs_tol / std::max(std::fabs(prefactor), 1e-3);
    QuadResult q = integrate(integrand, 0.0, cutoff, inner_tol);

    EvalResult r;
    r.value = prefactor * q.value;
    r.abs_err_estimate = std::fabs(prefactor) * q.abs_err + std::exp(-c.quad_cutoff_decades);
    r.method_used = KernelMethod::even_damped;
    r.terms_or_nodes = q.nodes;
    return r;
}

double u_even_damped(int n, double x, double t, const NumericControls& c) {
    return u_even_damped_eval(n, x, t, c).value;
}

namespace {

// One mollified oscillatory inversion (1/pi) int_0^inf e^{-eps b} cos(x b + t b^m) db,
// by adaptive head integration up to the first half-level past any stationary
// point, then accelerated summation over half-period segments.
struct OscIntegral {
    double value;
    double abs_err;
    int nodes;
};

OscIntegral mollified_oscillatory(int m, double x, double t, double eps) {
    auto phase = [&](double b) { return x * b + t * std::pow(b, m); };
    auto dphase = [&](double b) { return x + m * t * std::pow(b, m - 1); };
    auto f = [&](double b) { return std::exp(-eps * b) * std::cos(phase(b)); };

    const double bstar = (x < 0.0) ? std::pow(-x / (m * t), 1.0 / (m - 1)) : 0.0;

    // Level crossings phi = (k + 1/2) pi on the increasing branch b > bstar.
    auto solve_level = [&](double level, double lo) {
        double hi = lo + kPi / std::max(dphase(lo), 1e-8);
        while (phase(hi) < level) hi += (hi - lo);
        // bisection; phi is monotone on [bstar, inf)
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (phase(mid) < level)
                lo = mid;
            else
                hi = mid;
            if (hi - lo < 1e-14 * (1.0 + hi)) break;
        }
        return 0.5 * (lo + hi);
    };

    const double phi0 = std::max(phase(bstar), 0.0);
    int k0 = static_cast<int>(std::ceil(phi0 / kPi - 0.5 + 1.0));
    if (k0 < 0) k0 = 0;
    double z = solve_level((k0 + 0.5) * kPi, bstar);

    OscIntegral out{0.0, 0.0, 0};
    QuadResult head = integrate(f, 0.0, z, 1e-12, 2000);
    out.nodes += head.nodes;
    out.abs_err += head.abs_err;

    std::vector<double> terms;
    AccelResult acc{0.0, std::numeric_limits<double>::infinity()};
    double prev = z;
    for (int k = 1; k <= 96; ++k) {
        const double next = solve_level((k0 + k + 0.5) * kPi, prev);
        QuadResult seg = integrate(f, prev, next, 1e-13, 16);
        out.nodes += seg.nodes;
        terms.push_back(seg.value);
        prev = next;
        if (k >= 12) {
            acc = accelerate_alternating(terms);
            if (acc.abs_err < 1e-11) break;
        }
    }
    out.value = (head.value + acc.value) / kPi;
    out.abs_err = (out.abs_err + acc.abs_err) / kPi;
    return out;
}

}  // namespace

EvalResult u_fourier_oracle_eval(const EquationOrder& order, double x, double t,
                                 const NumericControls& c) {
    require_time(t);
    EvalResult r;
    r.method_used = KernelMethod::fourier_oracle;

    if (!order.odd()) {
        const int m = order.m;
        const double cutoff = damped_cutoff(t, m, 0.0, c.quad_cutoff_decades);
        auto integrand = [&](double beta) {
            return std::exp(-t * std::pow(beta, m)) * std::cos(beta * x);
        };
        QuadResult q = integrate(integrand, 0.0, cutoff, c.quad_abs_tol * kPi);
        r.value = q.value / kPi;
        r.abs_err_estimate = q.abs_err / kPi + std::exp(-c.quad_cutoff_decades);
        r.terms_or_nodes = q.nodes;
        return r;
    }

    // Mirror of the paper's mu -> 0 limiting device: mollifier e^{-eps b}
    // with Richardson extrapolation to eps = 0.
    const double eps0 = 1e-2;
    OscIntegral i1 = mollified_oscillatory(order.m, x, t, eps0);
    OscIntegral i2 = mollified_oscillatory(order.m, x, t, eps0 / 2.0);
    OscIntegral i3 = mollified_oscillatory(order.m, x, t, eps0 / 4.0);

    const double a1 = 2.0 * i2.value - i1.value;
    const double a2 = 2.0 * i3.value - i2.value;
    const double extrapolated = (4.0 * a2 - a1) / 3.0;
    const double ext_err = std::fabs(extrapolated - a2);
    const double quad_err = i1.abs_err + 2.0 * i2.abs_err + 3.0 * i3.abs_err;

    if (!std::isfinite(extrapolated) || ext_err > 1e-4)
        raise(Errc::oracle_failure, "u_fourier_oracle: eps -> 0 extrapolation did not converge");

    r.value = extrapolated;
    r.abs_err_estimate = ext_err + quad_err;
    r.terms_or_nodes = i1.nodes + i2.nodes + i3.nodes;
    return r;
}

double u_fourier_oracle(const EquationOrder& order, double x, double t,
                        const NumericControls& c) {
    return u_fourier_oracle_eval(order, x, t, c).value;
}

double u3_airy(double x, double t) {
    require_time(t);
    const double s = std::cbrt(3.0 * t);
    return airy_ai(x / s) / s;
}

EvalResult u4_series_eval(double x, double t, const NumericControls& c) {
    require_time(t);
    const double scaled = std::fabs(x) / std::pow(t, 0.25);
    if (scaled > kSeriesRange)
        raise(Errc::method_range,
              "u4_series: |x|/t^(1/4) beyond cancellation threshold; use the damped route");

    // u4(x,t) = (1/(4 pi t^{1/4})) sum_k (-1)^k (x^2/sqrt(t))^k G(k/2+1/4) / (2k)!
    const double y = x * x / std::sqrt(t);
    KahanSum sum;
    double yk = 1.0;  // y^k / (2k)!
    double max_mag = 0.0;
    double remainder = std::numeric_limits<double>::infinity();
    int k = 0;
    for (; k <= c.series_max_terms; ++k) {
        const double term = yk * gamma_fn(0.5 * k + 0.25) * ((k % 2) ? -1.0 : 1.0);
        sum.add(term);
        max_mag = std::max(max_mag, std::fabs(term));
        yk *= y / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        const double ratio =
            y * std::sqrt(0.5 * (k + 1) + 0.75) / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        if (ratio < 0.5) {
            const double next = std::fabs(yk) * gamma_fn(0.5 * (k + 1) + 0.25);
            remainder = next / (1.0 - ratio);
            if (remainder <= c.series_rel_tol * std::max(std::fabs(sum.value()), max_mag * 1e-3)) {
                ++k;
                break;
            }
        }
    }

    const double prefactor = 1.0 / (4.0 * kPi * std::pow(t, 0.25));
    EvalResult r;
    r.value = prefactor * sum.value();
    r.abs_err_estimate = prefactor * (remainder + max_mag * kEps * std::max(k, 4));
    r.method_used = KernelMethod::biquadratic_series;
    r.terms_or_nodes = k;
    return r;
}

double u4_series(double x, double t, const NumericControls& c) {
    return u4_series_eval(x, t, c).value;
}

double u_origin(const EquationOrder& order, double t) {
    require_time(t);
    return origin_value(order, t);
}

MassResult mass_positive_halfline(const EquationOrder& order, double t,
                                  const NumericControls& c) {
    require_time(t);
    const double width = std::pow(t, 1.0 / order.m);
    auto u = [&](double x) { return evaluate_point(order, x, t, Method::auto_select, c).value; };

    MassResult out;
    KahanSum total;
    int quiet = 0;
    double last_panel = 0.0;
    const int max_panels = 64;
    int j = 0;
    for (; j < max_panels; ++j) {
        QuadResult q = integrate(u, j * width, (j + 1) * width, 1e-8, 256);
        total.add(q.value);
        out.abs_err += q.abs_err;
        out.nodes += q.nodes;
        last_panel = std::fabs(q.value);
        quiet = (last_panel < 1e-8) ? quiet + 1 : 0;
        if (quiet >= 2) break;
    }
    const double edge = std::fabs(u((j + 1) * width));
    out.value = total.value();
    out.tail_bound = last_panel + 3.0 * edge * width;
    out.tail_bound_met = (j < max_panels) && (out.tail_bound < 1e-5);
    out.abs_err += out.tail_bound;
    return out;
}

double f_m_eval(int m_exp, double x, double t) {
    require_time(t);
    if (m_exp < 0) raise(Errc::invalid_argument, "f_m_eval: exponent must be >= 0");
    return std::pow(x / t, m_exp) * u3_airy(x, t);
}

namespace {

// Fornberg weights for the d-th derivative at 0 on the given offsets.
std::vector<double> fd_weights(int d, const std::vector<double>& offsets) {
    const int n = static_cast<int>(offsets.size());
    std::vector<std::vector<double>> c(n, std::vector<double>(d + 1, 0.0));
    double c1 = 1.0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        double c2 = 1.0;
        const int mn = std::min(i, d);
        for (int j = 0; j < i; ++j) {
            const double c3 = offsets[i] - offsets[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - offsets[i - 1] * c[i - 1][k]) / c2;
                c[i][0] = -c1 * offsets[i - 1] * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (offsets[i] * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = offsets[i] * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][d];
    return w;
}

}  // namespace

double pde_residual(const EquationOrder& order,
                    const std::function<double(double, double)>& field, double x,
                    double t, double h) {
    require_time(t);
    if (!(h > 0.0)) raise(Errc::invalid_argument, "pde_residual: h must be positive");

    // Time derivative: 5-point O(h^4) stencil, step small enough to stay in t > 0.
    double ht = h;
    while (t - 2.0 * ht <= 0.0) ht *= 0.5;
    const double du_dt = (field(x, t - 2.0 * ht) - 8.0 * field(x, t - ht) +
                          8.0 * field(x, t + ht) - field(x, t + 2.0 * ht)) /
                         (12.0 * ht);

    // Space derivative of order m: symmetric (m + 2 - (m odd ? 0 : 1))-point
    // O(h^2) stencil (5-point for d^3, 7-point for d^5).
    const int m = order.m;
    const int half = (m % 2 == 1) ? (m + 1) / 2 + 1 : m / 2 + 1;
    std::vector<double> offsets;
    for (int i = -half + 1; i <= half - 1; ++i) offsets.push_back(i);
    const std::vector<double> w = fd_weights(m, offsets);

    double dm = 0.0;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (w[i] == 0.0) continue;
        dm += w[i] * field(x + offsets[i] * h, t);
    }
    dm /= std::pow(h, m);

    const double residual = du_dt - order.kappa * dm;
    if (!std::isfinite(residual)) raise(Errc::numeric, "pde_residual: stencil overflow");
    return std::fabs(residual);
}

EvalResult evaluate_point(const EquationOrder& order, double x, double t, Method method,
                          const NumericControls& c) {
    require_time(t);
    c.validate();
    const double scaled = std::fabs(x) / std::pow(t, 1.0 / order.m);

    if (method == Method::auto_select) {
        if (order.odd()) {
            if (x == 0.0 || scaled <= kSeriesRange) method = Method::series;
            else if (order.m == 3) method = Method::airy;
            else method = Method::damped;
        } else {
            if (order.m == 4 && scaled <= kSeriesRange) method = Method::series;
            else method = Method::damped;
        }
    }

    switch (method) {
        case Method::series:
            if (order.odd()) return u_odd_series_eval(order.n, x, t, c);
            if (order.m == 4) return u4_series_eval(x, t, c);
            raise(Errc::method_range, "series method: no even series except m = 4");
        case Method::damped:
            return order.odd() ? u_odd_damped_eval(order.n, x, t, c)
                               : u_even_damped_eval(order.n, x, t, c);
        case Method::fourier:
            return u_fourier_oracle_eval(order, x, t, c);
        case Method::airy: {
            if (order.m != 3) raise(Errc::method_range, "airy method: only m = 3");
            const double s = std::cbrt(3.0 * t);
            const SeriesEval ai = airy_ai_eval(x / s);
            EvalResult r;
            r.value = ai.value / s;
            r.abs_err_estimate = ai.truncation_bound / s;
            r.method_used = KernelMethod::airy_closed;
            r.terms_or_nodes = ai.terms_used;
            return r;
        }
        case Method::auto_select: break;
    }
    raise(Errc::invalid_argument, "evaluate_point: unreachable method");
}

std::vector<PointOutcome> evaluate(const EvalRequest& request) {
    request.controls.validate();
    std::vector<PointOutcome> out;
    out.reserve(request.points.size());
    for (const EvalPoint& p : request.points) {
        PointOutcome o;
        try {
            o.result = evaluate_point(request.order, p.x, p.t, request.method, request.controls);
            if (!std::isfinite(o.result.value) || !std::isfinite(o.result.abs_err_estimate))
                raise(Errc::numeric, "evaluate: non-finite value");
            o.ok = true;
        } catch (const Error& e) {
            o.ok = false;
            o.code = e.code();
            o.message = e.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace hoheat
