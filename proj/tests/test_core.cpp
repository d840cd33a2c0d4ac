#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hoheat/core.hpp"
#include "hoheat/kernels.hpp"
#include "hoheat/quadrature.hpp"

#include "oracle_utils.hpp"

using namespace hoheat;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

TEST_CASE("derive_constants examples") {
    const auto m3 = derive_constants(3);
    CHECK(m3.a == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    CHECK(m3.b == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m3.kappa == -1);

    const auto m2 = derive_constants(2);
    CHECK(m2.a == 1.0);
    CHECK(m2.b == 0.0);
    CHECK(m2.kappa == 1);

    const auto m5 = derive_constants(5);
    CHECK(m5.a == doctest::Approx(std::cos(kPi / 10.0)).epsilon(1e-15));
    CHECK(m5.b == doctest::Approx(std::sin(kPi / 10.0)).epsilon(1e-15));
    std::complex<double> p(1.0, 0.0);
    for (int i = 0; i < 5; ++i) p *= std::complex<double>(m5.a, m5.b);
    CHECK(std::abs(p - std::complex<double>(0.0, 1.0)) < 1e-12);
}

TEST_CASE("invalid order rejected") {
    CHECK_THROWS_AS(EquationOrder::of(1), Error);
    CHECK_THROWS_AS(EquationOrder::of(0), Error);
    CHECK_THROWS_AS(EquationOrder::of(-3), Error);
    try {
        EquationOrder::of(1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_order);
    }
}

TEST_CASE("unit circle property for all odd orders") {
    for (int m = 3; m <= 41; m += 2) {
        const EquationOrder o = EquationOrder::of(m);
        CHECK(std::fabs(o.a * o.a + o.b * o.b - 1.0) < 1e-15);
        std::complex<double> p(1.0, 0.0);
        for (int i = 0; i < m; ++i) p *= std::complex<double>(o.a, o.b);
        CHECK(std::abs(p - std::complex<double>(0.0, 1.0)) < 1e-12);
        // mirror root: (a - ib)^m = -i
        std::complex<double> q(1.0, 0.0);
        for (int i = 0; i < m; ++i) q *= std::complex<double>(o.a, -o.b);
        CHECK(std::abs(q + std::complex<double>(0.0, 1.0)) < 1e-12);
    }
}

TEST_CASE("kappa sign per parity") {
    CHECK(EquationOrder::of(2).kappa == 1);   // classical heat
    CHECK(EquationOrder::of(4).kappa == -1);  // biquadratic
    CHECK(EquationOrder::of(6).kappa == 1);
    CHECK(EquationOrder::of(3).kappa == -1);  // du/dt = -d^3u/dx^3
    CHECK(EquationOrder::of(5).kappa == 1);
    CHECK(EquationOrder::of(7).kappa == -1);
}

TEST_CASE("generalized gamma normalization and moments") {
    for (double g : {2.0, 3.0, 4.0, 5.0, 7.0})
        for (double t : {0.5, 1.0, 2.0}) {
            const GenGammaLaw law = GenGammaLaw::of(g, t);
            const double upper = std::pow(t * 45.0, 1.0 / g);
            const QuadResult norm =
                integrate([&](double x) { return law.density(x); }, 0.0, upper, 1e-12);
            CHECK(std::fabs(norm.value - 1.0) < 1e-10);

            for (double k : {1.0, 2.0, 3.0}) {
                const QuadResult mom = integrate(
                    [&](double x) { return std::pow(x, k) * law.density(x); }, 0.0, upper,
                    1e-13);
                const double expected =
                    std::pow(t, k / g) * oracle::gamma_oracle(1.0 + k / g);
                CHECK(mom.value == doctest::Approx(expected).epsilon(1e-9));
                CHECK(law.moment(k) == doctest::Approx(expected).epsilon(1e-13));
            }
        }
}

TEST_CASE("generalized gamma validation and cdf") {
    CHECK_THROWS_AS(GenGammaLaw::of(0.0, 1.0), Error);
    CHECK_THROWS_AS(GenGammaLaw::of(2.0, -1.0), Error);
    const GenGammaLaw law = GenGammaLaw::of(3.0, 2.0);
    CHECK(law.cdf(0.0) == 0.0);
    CHECK(law.cdf(std::pow(2.0 * std::log(2.0), 1.0 / 3.0)) == doctest::Approx(0.5));
}

TEST_CASE("stable law admissibility and subordinator skew") {
    CHECK_THROWS_AS(StableLaw::of(0.0, 0.0, 1.0), Error);
    CHECK_THROWS_AS(StableLaw::of(2.5, 0.0, 1.0), Error);
    CHECK_THROWS_AS(StableLaw::of(0.5, 0.7, 1.0), Error);    // |nu| > alpha
    CHECK_THROWS_AS(StableLaw::of(1.5, 0.7, 1.0), Error);    // |nu| > 2 - alpha
    CHECK_THROWS_AS(StableLaw::of(0.5, 0.25, -1.0), Error);  // t <= 0

    for (double alpha : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
        const StableLaw law = StableLaw::of(alpha, alpha, 1.0);
        CHECK(law.theta == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(law.sigma == doctest::Approx(std::cos(kPi * alpha / 2.0)).epsilon(1e-15));
        CHECK(law.sigma > 0.0);
    }
}

TEST_CASE("nu <-> (theta, sigma) round trip") {
    for (double alpha : {0.2, 1.0 / 3.0, 0.5, 0.9, 1.5})
        for (double frac : {-1.0, -0.4, 0.0, 0.3, 1.0}) {
            const double nu = frac * std::min(alpha, 2.0 - alpha);
            const SkewScale ss = skew_scale_from_nu(alpha, nu);
            CHECK(std::fabs(nu_from_skew(alpha, ss.theta) - nu) < 1e-14);
        }
    CHECK_THROWS_AS(skew_scale_from_nu(1.0, 0.5), Error);
}

TEST_CASE("numeric controls validation") {
    NumericControls c;
    CHECK_NOTHROW(c.validate());
    c.series_max_terms = 5;
    CHECK_THROWS_AS(c.validate(), Error);
    c = NumericControls{};
    c.quad_abs_tol = 0.0;
    CHECK_THROWS_AS(c.validate(), Error);
    c = NumericControls{};
    c.mc_samples = 0;
    CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("gauss-kronrod panel is exact on low-degree polynomials") {
    // K15 integrates polynomials up to degree 22 exactly
    const QuadResult q1 = gk15_panel([](double x) { return 5.0 * x * x * x * x; }, -1.0, 2.0);
    CHECK(q1.value == doctest::Approx(33.0).epsilon(1e-14));
    const QuadResult q2 =
        gk15_panel([](double x) { return std::pow(x, 13.0); }, 0.0, 1.0);
    CHECK(q2.value == doctest::Approx(1.0 / 14.0).epsilon(1e-13));
    CHECK(q2.abs_err < 1e-12);
}

TEST_CASE("adaptive quadrature resolves a sharp peak and reports its error") {
    // narrow Lorentzian: int 1/((x-0.3)^2 + 1e-4) dx over [0,1]
    const double w = 1e-2;
    const QuadResult q = integrate(
        [&](double x) { return 1.0 / ((x - 0.3) * (x - 0.3) + w * w); }, 0.0, 1.0, 1e-10);
    const double exact = (std::atan(0.7 / w) + std::atan(0.3 / w)) / w;
    CHECK(std::fabs(q.value - exact) < 1e-8);
    CHECK(std::fabs(q.value - exact) <= q.abs_err + 1e-9);
    CHECK(q.nodes > 15);  // forced to subdivide
}

TEST_CASE("alternating series acceleration") {
    // sum (-1)^k/(k+1) = ln 2 and sum (-1)^k/(2k+1) = pi/4 from few terms
    std::vector<double> log_terms, pi_terms;
    for (int k = 0; k < 20; ++k) {
        log_terms.push_back(((k % 2) ? -1.0 : 1.0) / (k + 1.0));
        pi_terms.push_back(((k % 2) ? -1.0 : 1.0) / (2.0 * k + 1.0));
    }
    const AccelResult a = accelerate_alternating(log_terms);
    CHECK(std::fabs(a.value - std::log(2.0)) < 1e-6);
    CHECK(std::fabs(a.value - std::log(2.0)) <= a.abs_err + 1e-9);
    const AccelResult b = accelerate_alternating(pi_terms);
    CHECK(std::fabs(b.value - kPi / 4.0) < 1e-6);
}

TEST_CASE("evaluate reports range failures per point, never NaN") {
    EvalRequest req;
    req.order = EquationOrder::of(3);
    req.method = Method::series;
    req.points = {{0.5, 1.0}, {12.0, 1.0}, {-1.0, 1.0}};
    const auto rows = evaluate(req);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].ok);
    CHECK(rows[0].result.abs_err_estimate >= 0.0);
    CHECK_FALSE(rows[1].ok);
    CHECK(rows[1].code == Errc::method_range);
    CHECK(rows[2].ok);
    for (const auto& r : rows)
        if (r.ok) CHECK(std::isfinite(r.result.value));
}
