#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hoheat/core.hpp"
#include "hoheat/special.hpp"

namespace hoheat {

/// Composition X_{2n+1}(T^1(T^2(... T^m(t)))) of the base pseudo-process with
/// iterated stable subordinators of order 1/(2n+1).  The resulting law is
/// stable with alpha = (2n+1)^{-(depth-1)} and oscillation index
/// nu = -(2n+1)^{-depth}; the negative sign carries the phase of the
/// composition characteristic function (its n = 1 case is the asymmetric
/// Cauchy law centered at -t/2).
struct CompositionSpec {
    int depth = 1;   // number of iterated subordinators
    int base_n = 1;  // base order is 2*base_n + 1
    double t = 1.0;

    static CompositionSpec of(int depth, double t, int base_n = 1);

    double alpha_eff() const;
    double nu_eff() const;
};

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::string law_tag;
};

/// Deterministic RNG used by every sampler: mt19937_64 with hand-rolled
/// uniform/exponential transforms so batches reproduce bit-for-bit from the
/// seed on any platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on (0, 1).
    double uniform() {
        // 53-bit mantissa; offset by half an ulp to avoid exact 0.
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
    }
    double exponential() { return -std::log(uniform()); }

  private:
    std::mt19937_64 gen_;
};

/// E e^{i beta S} = exp[-sigma t |beta|^alpha (1 - i theta sgn(beta) tan(pi alpha/2))]
/// evaluated through the equivalent (alpha, nu) form, which stays finite at
/// alpha = 1.
std::complex<double> stable_cf(const StableLaw& law, double beta);

/// Density of the 1/3-stable subordinator, (t/s) (3s)^{-1/3} Ai(t (3s)^{-1/3}).
double subordinator_density_13(double s, double t);

/// Density of X_3(T_{1/3}(t)): the asymmetric Cauchy law
/// (sqrt(3)/(2 pi)) t / ((x + t/2)^2 + (3/4) t^2).
double cauchy_composition_density(double x, double t);

/// Characteristic function of the depth-n composition,
/// exp[-t |beta|^{3^{-(n-1)}} (cos(pi/(2*3^n)) + i sgn(beta) sin(pi/(2*3^n)))].
std::complex<double> zn_cf(const CompositionSpec& spec, double beta);

/// General base: order 1/(2n+1)^{m-1} with phase pi/(2 (2n+1)^m).
std::complex<double> zn_cf_general(int base_n, int depth_m, double beta, double t);

/// StableLaw whose stable_cf reproduces zn_cf exactly.
StableLaw composition_law(const CompositionSpec& spec);

/// Positively skewed stable density (Laplace transform e^{-lambda^alpha t})
/// through the descending series
///   p_alpha(x, t) = (alpha/pi) sum_k (-1)^k Gamma(alpha(1+k))
///                   sin(pi alpha (1+k)) t^{k+1} x^{-alpha(1+k)-1} / k!.
/// Throws Errc::range when the small-x cancellation bound cannot certify the
/// result.
SeriesEval stable_density_series_eval(double alpha, double x, double t,
                                      const NumericControls& c = {});
double stable_density_series(double alpha, double x, double t,
                             const NumericControls& c = {});

/// X = (t E)^{1/gamma} with E standard exponential.
SampleBatch sample_gen_gamma(const GenGammaLaw& law, std::size_t count, std::uint64_t seed);

/// Chambers-Mallows-Stuck/Kanter sampler for the positively skewed stable law
/// with Laplace transform e^{-lambda^alpha t}, alpha in (0,1).
SampleBatch sample_skewed_stable(double alpha, double t, std::size_t count,
                                 std::uint64_t seed);

/// Samples the composition law (general CMS with the mapped skew; depth 1 is
/// the closed-form asymmetric Cauchy).
SampleBatch sample_zn(const CompositionSpec& spec, std::size_t count, std::uint64_t seed);

/// (1/N) sum_j e^{i beta x_j}.
std::complex<double> empirical_cf(std::span<const double> samples, double beta);

/// Kolmogorov-Smirnov distance of the sample against an analytic CDF.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

}  // namespace hoheat
