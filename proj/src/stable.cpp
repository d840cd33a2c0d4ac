#include "hoheat/stable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hoheat/kernels.hpp"
#include "hoheat/quadrature.hpp"

namespace hoheat {
namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kEps = 2.220446049250313e-16;

double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

CompositionSpec CompositionSpec::of(int depth, double t, int base_n) {
    if (depth < 1) raise(Errc::invalid_argument, "CompositionSpec: depth must be >= 1");
    if (base_n < 1) raise(Errc::invalid_argument, "CompositionSpec: base_n must be >= 1");
    if (!(t > 0.0)) raise(Errc::invalid_time, "CompositionSpec: t must be positive");
    return CompositionSpec{depth, base_n, t};
}

double CompositionSpec::alpha_eff() const {
    return 1.0 / ipow(2.0 * base_n + 1.0, depth - 1);
}

double CompositionSpec::nu_eff() const {
    return -1.0 / ipow(2.0 * base_n + 1.0, depth);
}

std::complex<double> stable_cf(const StableLaw& law, double beta) {
    if (beta == 0.0) return {1.0, 0.0};
    const double sgn = (beta > 0.0) ? 1.0 : -1.0;
    const double mag = std::pow(std::fabs(beta), law.alpha) * law.t;
    // exponent -t |b|^alpha (cos(pi nu/2) - i sgn(b) sin(pi nu/2))
    const std::complex<double> expo(-mag * std::cos(kPi * law.nu / 2.0),
                                    mag * sgn * std::sin(kPi * law.nu / 2.0));
    return std::exp(expo);
}

double subordinator_density_13(double s, double t) {
    if (!(s > 0.0) || !(t > 0.0))
        raise(Errc::invalid_argument, "subordinator_density_13: s and t must be positive");
    const double cbrt3s = std::cbrt(3.0 * s);
    return (t / s) / cbrt3s * airy_ai(t / cbrt3s);
}

double cauchy_composition_density(double x, double t) {
    if (!(t > 0.0)) raise(Errc::invalid_time, "cauchy_composition_density: t must be positive");
    const double dx = x + 0.5 * t;
    return std::sqrt(3.0) / (2.0 * kPi) * t / (dx * dx + 0.75 * t * t);
}

std::complex<double> zn_cf(const CompositionSpec& spec, double beta) {
    return zn_cf_general(spec.base_n, spec.depth, beta, spec.t);
}

std::complex<double> zn_cf_general(int base_n, int depth_m, double beta, double t) {
    if (base_n < 1 || depth_m < 1)
        raise(Errc::invalid_argument, "zn_cf_general: base_n and depth_m must be >= 1");
    if (beta == 0.0) return {1.0, 0.0};
    const double base = 2.0 * base_n + 1.0;
    const double alpha = 1.0 / ipow(base, depth_m - 1);
    const double phase = kPi / (2.0 * ipow(base, depth_m));
    const double sgn = (beta > 0.0) ? 1.0 : -1.0;
    const double mag = t * std::pow(std::fabs(beta), alpha);
    const std::complex<double> expo(-mag * std::cos(phase), -mag * sgn * std::sin(phase));
    return std::exp(expo);
}

StableLaw composition_law(const CompositionSpec& spec) {
    return StableLaw::of(spec.alpha_eff(), spec.nu_eff(), spec.t);
}

SeriesEval stable_density_series_eval(double alpha, double x, double t,
                                      const NumericControls& c) {
    if (!(alpha > 0.0) || alpha >= 1.0)
        raise(Errc::invalid_argument, "stable_density_series: alpha must lie in (0, 1)");
    if (!(x > 0.0)) raise(Errc::invalid_argument, "stable_density_series: x must be positive");
    if (!(t > 0.0)) raise(Errc::invalid_time, "stable_density_series: t must be positive");

    // p_alpha(x,t) = (alpha/pi) sum_k (-1)^k Gamma(alpha(1+k)) sin(pi alpha(1+k))
    //               t^{k+1} x^{-alpha(1+k)-1} / k!
    // Descending series in x: the ratio of consecutive magnitudes is
    // Gamma(alpha(k+2))/Gamma(alpha(k+1)) * t x^{-alpha} / (k+1).
    const double w = t * std::pow(x, -alpha);
    KahanSum sum;
    double wk = 1.0;  // w^k / k!
    double max_mag = 0.0;
    double remainder = std::numeric_limits<double>::infinity();
    int k = 0;
    for (; k <= c.series_max_terms; ++k) {
        const double g = alpha * (1.0 + k);
        if (g > 170.0) break;
        const double term =
            ((k % 2) ? -1.0 : 1.0) * wk * gamma_fn(g) * std::sin(kPi * g);
        sum.add(term);
        max_mag = std::max(max_mag, std::fabs(term));
        wk *= w / (k + 1.0);
        const double gn = alpha * (2.0 + k);
        // Wendel bound on the gamma ratio.
        const double ratio = w * std::pow(gn, alpha) * (1.0 + alpha / g) / (k + 1.0);
        if (ratio < 0.995 && gn <= 170.0) {
            const double next = wk * gamma_fn(gn);
            remainder = next / (1.0 - ratio);
            if (remainder <= c.series_rel_tol * std::max(std::fabs(sum.value()), 1e-3 * max_mag)) {
                ++k;
                break;
            }
        }
    }

    // term k carries (t x^{-alpha})^k / k!; the leading t x^{-alpha-1} factor
    // lives in the prefactor
    const double prefactor = alpha / kPi * std::pow(x, -alpha - 1.0) * t;
    SeriesEval out;
    out.value = prefactor * sum.value();
    out.terms_used = k;
    const double scale = std::fabs(prefactor);
    out.truncation_bound = scale * (remainder + max_mag * kEps * std::max(k, 4));
    if (!std::isfinite(out.truncation_bound) ||
        out.truncation_bound > std::max(1e-10, 1e-8 * std::fabs(out.value)))
        raise(Errc::range,
              "stable_density_series: small-x cancellation prevents certification");
    return out;
}

double stable_density_series(double alpha, double x, double t, const NumericControls& c) {
    return stable_density_series_eval(alpha, x, t, c).value;
}

SampleBatch sample_gen_gamma(const GenGammaLaw& law, std::size_t count, std::uint64_t seed) {
    SampleBatch batch;
    batch.seed = seed;
    batch.law_tag = "gen_gamma(gamma=" + std::to_string(law.gamma) +
                    ",t=" + std::to_string(law.t) + ")";
    batch.values.resize(count);
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i)
        batch.values[i] = std::pow(law.t * rng.exponential(), 1.0 / law.gamma);
    return batch;
}

namespace {

// Chambers-Mallows-Stuck draw from the standard law with characteristic
// function exp(-|b|^alpha (1 - i theta sgn(b) tan(pi alpha/2))), alpha != 1.
double cms_standard(double alpha, double theta, Rng& rng) {
    const double half_pi = 0.5 * kPi;
    const double v = kPi * (rng.uniform() - 0.5);
    const double w = rng.exponential();
    const double ta = std::tan(half_pi * alpha);
    const double b0 = std::atan(theta * ta) / alpha;
    const double s0 = std::pow(1.0 + theta * theta * ta * ta, 0.5 / alpha);
    const double num = std::sin(alpha * (v + b0));
    const double den = std::pow(std::cos(v), 1.0 / alpha);
    const double tail = std::pow(std::cos(v - alpha * (v + b0)) / w, (1.0 - alpha) / alpha);
    return s0 * num / den * tail;
}

}  // namespace

SampleBatch sample_skewed_stable(double alpha, double t, std::size_t count,
                                 std::uint64_t seed) {
    if (!(alpha > 0.0) || alpha >= 1.0)
        raise(Errc::invalid_argument, "sample_skewed_stable: alpha must lie in (0, 1)");
    if (!(t > 0.0)) raise(Errc::invalid_time, "sample_skewed_stable: t must be positive");

    SampleBatch batch;
    batch.seed = seed;
    batch.law_tag = "skewed_stable(alpha=" + std::to_string(alpha) +
                    ",t=" + std::to_string(t) + ")";
    batch.values.resize(count);
    Rng rng(seed);
    // Laplace transform e^{-lambda^alpha t}: sigma = cos(pi alpha/2), theta = 1,
    // so the draw scales by (t cos(pi alpha/2))^{1/alpha}.
    const double scale = std::pow(t * std::cos(kPi * alpha / 2.0), 1.0 / alpha);
    for (std::size_t i = 0; i < count; ++i)
        batch.values[i] = scale * cms_standard(alpha, 1.0, rng);
    return batch;
}

SampleBatch sample_zn(const CompositionSpec& spec, std::size_t count, std::uint64_t seed) {
    SampleBatch batch;
    batch.seed = seed;
    batch.law_tag = "zn(depth=" + std::to_string(spec.depth) +
                    ",base=" + std::to_string(2 * spec.base_n + 1) + ")";
    batch.values.resize(count);
    Rng rng(seed);

    const StableLaw law = composition_law(spec);
    if (law.alpha == 1.0) {
        // Depth 1: asymmetric Cauchy with location -t sin(pi/(2(2n+1))) and
        // scale t cos(pi/(2(2n+1))).
        const double phase = kPi / (2.0 * (2.0 * spec.base_n + 1.0));
        const double loc = -spec.t * std::sin(phase);
        const double scale = spec.t * std::cos(phase);
        for (std::size_t i = 0; i < count; ++i)
            batch.values[i] = loc + scale * std::tan(kPi * (rng.uniform() - 0.5));
        return batch;
    }

    const double scale = std::pow(law.sigma * law.t, 1.0 / law.alpha);
    for (std::size_t i = 0; i < count; ++i)
        batch.values[i] = scale * cms_standard(law.alpha, law.theta, rng);
    return batch;
}

std::complex<double> empirical_cf(std::span<const double> samples, double beta) {
    KahanSum re, im;
    for (double x : samples) {
        re.add(std::cos(beta * x));
        im.add(std::sin(beta * x));
    }
    const double n = static_cast<double>(samples.size());
    return {re.value() / n, im.value() / n};
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::fabs(f - (i + 1) / n));
        d = std::max(d, std::fabs(f - i / n));
    }
    return d;
}

}  // namespace hoheat
