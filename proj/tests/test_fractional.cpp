#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hoheat/fractional.hpp"
#include "hoheat/quadrature.hpp"
#include "hoheat/special.hpp"

#include "oracle_utils.hpp"

using namespace hoheat;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

TEST_CASE("q_alpha closed form at alpha = 1/2") {
    // q_{1/2}(x, 1) is the folded heat kernel e^{-x^2/4} / sqrt(pi)
    for (double x : {0.5, 1.0, 2.0})
        CHECK(q_alpha_density(0.5, x, 1.0) ==
              doctest::Approx(std::exp(-x * x / 4.0) / std::sqrt(kPi)).epsilon(1e-10));
}

TEST_CASE("q_alpha equals the Levy image under x = t (t/y)^alpha") {
    // change of variables y = (t^{alpha+1}/x)^{1/alpha}, alpha = 1/2, t = 1:
    // q(x) = levy(x^{-2}) * 2 x^{-3}
    for (double x : {0.7, 1.0, 2.0}) {
        const double y = 1.0 / (x * x);
        const double expected = oracle::levy_density(y, 1.0) * 2.0 * std::pow(x, -3.0);
        CHECK(q_alpha_density(0.5, x, 1.0) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("q_alpha normalization on the half-line") {
    for (double alpha : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
        KahanSum total;
        int quiet = 0;
        for (int j = 0; j < 40 && quiet < 2; ++j) {
            const QuadResult q = integrate(
                [&](double x) { return q_alpha_density(alpha, x, 1.0); }, double(j),
                j + 1.0, 1e-9, 512);
            total.add(q.value);
            quiet = (std::fabs(q.value) < 1e-9) ? quiet + 1 : 0;
        }
        CHECK(std::fabs(total.value() - 1.0) < 1e-6);
    }
}

TEST_CASE("q_alpha argument checks, far tail, and bound honesty") {
    CHECK_THROWS_AS(q_alpha_density(0.5, -1.0, 1.0), Error);
    CHECK_THROWS_AS(q_alpha_density(1.2, 1.0, 1.0), Error);
    CHECK_THROWS_AS(q_alpha_density(0.5, 1.0, 0.0), Error);

    // far tail reported as 0 with a finite envelope bound
    const SeriesEval far = q_alpha_density_eval(0.5, 20.0, 1.0);
    CHECK(far.value == 0.0);
    CHECK(far.truncation_bound < 1e-6);

    // no hole between the certified and the tail regime for the supported alphas
    for (double alpha : {0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75})
        for (double u = 0.05; u < 25.0; u += 0.05)
            CHECK_NOTHROW(q_alpha_density(alpha, u, 1.0));

    // past alpha ~ 0.75 a band of moderate u exceeds what the double-precision
    // series certifies while the value is still non-negligible; that band is
    // an honest range error
    CHECK_THROWS_AS(q_alpha_density(0.85, 2.2, 1.0), Error);
}

TEST_CASE("wright density reductions") {
    // nu = 1 is classical diffusion with diffusivity lambda^2
    for (double x : {0.0, 1.0})
        CHECK(wright_fractional_density(1.0, 1.0, x, 1.0) ==
              doctest::Approx(oracle::gaussian_heat_kernel(x, 1.0)).epsilon(1e-9));
    // lambda scaling: u depends on x/lambda and carries 1/lambda
    CHECK(wright_fractional_density(1.0, 2.0, 1.0, 1.0) ==
          doctest::Approx(0.5 * oracle::gaussian_heat_kernel(0.5, 1.0)).epsilon(1e-12));

    // fold: 2 u_{2 alpha} = q_alpha
    for (double alpha : {1.0 / 3.0, 0.5, 2.0 / 3.0})
        for (double x : {0.5, 1.0, 1.5})
            CHECK(std::fabs(2.0 * wright_fractional_density(2.0 * alpha, 1.0, x, 1.0) -
                            q_alpha_density(alpha, x, 1.0)) < 1e-8);

    // symmetry in x
    CHECK(wright_fractional_density(1.2, 1.0, -0.8, 1.0) ==
          wright_fractional_density(1.2, 1.0, 0.8, 1.0));
}

TEST_CASE("wright density in the wave regime nu in (1,2)") {
    // evaluated as a function (no probabilistic claims); still integrates to 1
    // ([-3.4, 3.4] covers all but ~3e-7 of the mass at nu = 1.5 and stays
    // inside the series certification range)
    const double nu = 1.5;
    const QuadResult q = integrate(
        [&](double x) { return wright_fractional_density(nu, 1.0, x, 1.0); }, -3.4, 3.4,
        1e-9, 4000);
    CHECK(std::fabs(q.value - 1.0) < 1e-5);
    CHECK_THROWS_AS(wright_fractional_density(2.0, 1.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(wright_fractional_density(0.0, 1.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(wright_fractional_density(1.0, 0.0, 1.0, 1.0), Error);
}

TEST_CASE("laplace transform in x") {
    CHECK(laplace_x_q(0.5, 0.0, 1.0) == 1.0);
    CHECK(laplace_x_q(1.0, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
    CHECK(laplace_x_q(0.5, 1.0, 1.0) ==
          doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-7));

    // quadrature of the density against the Mittag-Leffler value
    for (double alpha : {1.0 / 3.0, 0.5, 2.0 / 3.0})
        for (double lambda : {0.5, 1.0, 2.0}) {
            KahanSum total;
            int quiet = 0;
            for (int j = 0; j < 40 && quiet < 2; ++j) {
                const QuadResult q = integrate(
                    [&](double x) {
                        return std::exp(-lambda * x) * q_alpha_density(alpha, x, 1.0);
                    },
                    double(j), j + 1.0, 1e-9, 512);
                total.add(q.value);
                quiet = (std::fabs(q.value) < 1e-9) ? quiet + 1 : 0;
            }
            CHECK(std::fabs(total.value() - laplace_x_q(alpha, lambda, 1.0)) < 1e-6);
        }
}

TEST_CASE("laplace transform in t") {
    CHECK(laplace_t_q(1.0, 2.0, 1.5) == doctest::Approx(std::exp(-3.0)).epsilon(1e-14));
    CHECK(laplace_t_q(0.5, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    // mu -> 0+ grows like mu^{alpha-1}
    const double mu = 1e-4;
    CHECK(std::sqrt(mu) * laplace_t_q(0.5, mu, 1.0) ==
          doctest::Approx(std::exp(-std::sqrt(mu))).epsilon(1e-12));
    CHECK(laplace_t_q(0.5, mu, 1.0) > 50.0);

    // quadrature over t against the closed form
    for (double alpha : {1.0 / 3.0, 0.5})
        for (double x : {0.5, 1.0}) {
            KahanSum total;
            for (double lo = 0.0; lo < 38.0; lo += 0.5) {
                const QuadResult q = integrate(
                    [&](double t) {
                        return std::exp(-t) * q_alpha_density(alpha, x, t);
                    },
                    lo, lo + 0.5, 1e-9, 512);
                total.add(q.value);
            }
            CHECK(std::fabs(total.value() - laplace_t_q(alpha, 1.0, x)) < 1e-5);
        }
}

TEST_CASE("double laplace transform") {
    CHECK(double_laplace_q(0.5, 0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(double_laplace_q(1.0, 1.5, 2.0) == doctest::Approx(1.0 / 3.5).epsilon(1e-15));
    CHECK(double_laplace_q(0.5, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));

    // transformed equation mu^a L - mu^{a-1} = -lambda L
    for (double alpha : {1.0 / 3.0, 0.5, 0.8, 1.0})
        for (double lambda : {0.0, 0.7, 2.0})
            for (double mu : {0.5, 1.0, 3.0}) {
                const double L = double_laplace_q(alpha, lambda, mu);
                CHECK(std::fabs(std::pow(mu, alpha) * L - std::pow(mu, alpha - 1.0) +
                                lambda * L) < 1e-14);
            }
}

TEST_CASE("caputo residual via the L1 scheme") {
    CHECK(caputo_residual(0.5, 1.0, 1.0, 1.0 / 512.0) < 5e-3);
    // decreasing under refinement
    const double coarse = caputo_residual(0.5, 1.0, 1.0, 1.0 / 128.0);
    const double fine = caputo_residual(0.5, 1.0, 1.0, 1.0 / 512.0);
    CHECK(fine < coarse);

    // measured order about 2 - alpha at alpha = 2/3
    const double r1 = caputo_residual(2.0 / 3.0, 1.0, 1.0, 1.0 / 128.0);
    const double r2 = caputo_residual(2.0 / 3.0, 1.0, 1.0, 1.0 / 256.0);
    const double r3 = caputo_residual(2.0 / 3.0, 1.0, 1.0, 1.0 / 512.0);
    const double rate = 0.5 * (std::log2(r1 / r2) + std::log2(r2 / r3));
    CHECK(rate >= 1.0);
    CHECK(rate <= 1.8);

    CHECK_THROWS_AS(caputo_residual(0.5, 1.0, 1.0, 1.5), Error);
    CHECK_THROWS_AS(caputo_residual(0.5, -1.0, 1.0, 0.01), Error);
}

TEST_CASE("alpha -> 1 transport limit") {
    const double alpha = 0.999, x = 0.5, t = 1.0, h = 1e-3;
    const double dt =
        (q_alpha_density(alpha, x, t + h) - q_alpha_density(alpha, x, t - h)) / (2.0 * h);
    const double dx =
        (q_alpha_density(alpha, x + h, t) - q_alpha_density(alpha, x - h, t)) / (2.0 * h);
    CHECK(std::fabs(dt + dx) < 0.05);
}

TEST_CASE("FracLaw validation") {
    CHECK_THROWS_AS(FracLaw::of(1.0, 1.0), Error);
    CHECK_THROWS_AS(FracLaw::of(0.5, 0.0), Error);
    CHECK_NOTHROW(FracLaw::of(0.5, 2.0));
}
