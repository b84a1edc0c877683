#include "doctest.h"
#include "oracles.hpp"

#include "fracplasma/errors.hpp"
#include "fracplasma/specialfn.hpp"

#include <cmath>

namespace fp = fracplasma;

TEST_SUITE("specialfn")
{
    TEST_CASE("gamma at standard points")
    {
        CHECK(fp::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(fp::gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
        CHECK(fp::gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-15));
        CHECK_THROWS_AS(fp::gamma_fn(0.0), fp::PoleError);
        CHECK_THROWS_AS(fp::gamma_fn(-2.0), fp::PoleError);
    }

    TEST_CASE("mittag-leffler reduces to exp at order 1")
    {
        for (double z = -5.0; z <= 5.0; z += 0.25)
            CHECK(fp::mittag_leffler(1.0, z) ==
                  doctest::Approx(std::exp(z)).epsilon(1e-12));
    }

    TEST_CASE("mittag-leffler reference values")
    {
        CHECK(fp::mittag_leffler(0.5, 1.0) ==
              doctest::Approx(5.008980080762283).epsilon(1e-13));
        CHECK(fp::mittag_leffler(0.7, 2.0) ==
              doctest::Approx(20.966433131481951).epsilon(1e-13));
        CHECK(fp::mittag_leffler(0.5, 0.0) == 1.0);
    }

    TEST_CASE("mittag-leffler domain guards")
    {
        CHECK_THROWS_AS(fp::mittag_leffler(0.0, 1.0), fp::DomainError);
        CHECK_THROWS_AS(fp::mittag_leffler(1.5, 1.0), fp::DomainError);
        CHECK_THROWS_AS(fp::mittag_leffler(0.5, 5.5), fp::DomainError);
        CHECK_THROWS_AS(fp::mittag_leffler(0.5, std::nan("")), fp::DomainError);
        fp::SeriesControl bad;
        bad.max_terms = 0;
        CHECK_THROWS_AS(fp::mittag_leffler(0.5, 1.0, bad), fp::DomainError);
        fp::SeriesControl tiny;
        tiny.max_terms = 3;
        CHECK_THROWS_AS(fp::mittag_leffler(0.5, 4.0, tiny), fp::ConvergenceError);
    }

    TEST_CASE("dawson against quadrature oracle")
    {
        for (double x : {0.05, 0.2, 0.5, 0.9, 1.0, 2.0, 3.7, 6.0})
            CHECK(fp::dawson(x) == doctest::Approx(oracle::dawson(x)).epsilon(5e-14));
        CHECK(fp::dawson(0.2) == doctest::Approx(0.19475103336802805).epsilon(1e-14));
        CHECK(fp::dawson(1.0) == doctest::Approx(0.5380795069127684).epsilon(1e-14));
    }

    TEST_CASE("dawson peak and asymptotics")
    {
        CHECK(fp::dawson(0.9241388730045918) ==
              doctest::Approx(0.5410442246351817).epsilon(1e-13));
        // derivative vanishes at the maximum
        const double h = 1e-6;
        const double slope =
            (fp::dawson(0.9241388730045918 + h) - fp::dawson(0.9241388730045918 - h)) /
            (2 * h);
        CHECK(std::fabs(slope) < 1e-6);
        CHECK(fp::dawson(20.0) == doctest::Approx(0.02503136792640367).epsilon(1e-13));
        CHECK(fp::dawson(20.0) == doctest::Approx(1.0 / 40.0).epsilon(1e-3));
    }

    TEST_CASE("dawson satisfies its defining equation")
    {
        // D'(x) = 1 - 2 x D(x)
        const double h = 1e-5;
        for (double x = -8.0; x <= 8.0; x += 0.37) {
            const double lhs = (fp::dawson(x + h) - fp::dawson(x - h)) / (2 * h);
            const double rhs = 1.0 - 2.0 * x * fp::dawson(x);
            CHECK(std::fabs(lhs - rhs) < 1e-8);
        }
        CHECK(fp::dawson(-1.3) == doctest::Approx(-fp::dawson(1.3)).epsilon(1e-15));
        CHECK(fp::dawson(0.0) == 0.0);
    }

    TEST_CASE("velocity-response integral against principal-value oracle")
    {
        for (double x = -10.0; x <= 10.0; x += 0.5) {
            const fp::ComplexValue w = fp::plasma_response_integral(x);
            CHECK(std::fabs(w.real() - oracle::response_re_pv(x)) < 1e-8);
            CHECK(w.imag() ==
                  doctest::Approx(M_PI * x * std::exp(-x * x)).epsilon(1e-14));
        }
    }

    TEST_CASE("velocity-response parity")
    {
        for (double x : {0.3, 1.1, 2.5}) {
            const fp::ComplexValue wp = fp::plasma_response_integral(x);
            const fp::ComplexValue wm = fp::plasma_response_integral(-x);
            CHECK(wp.real() == doctest::Approx(wm.real()).epsilon(1e-14));
            CHECK(wp.imag() == doctest::Approx(-wm.imag()).epsilon(1e-14));
        }
    }

    TEST_CASE("half-order bessel")
    {
        for (double z : {0.3, 1.0, 4.2})
            CHECK(fp::bessel_j_half(z) ==
                  doctest::Approx(std::sqrt(2.0 / (M_PI * z)) * std::sin(z))
                      .epsilon(1e-15));
        CHECK_THROWS_AS(fp::bessel_j_half(0.0), fp::DomainError);
        CHECK_THROWS_AS(fp::bessel_j_half(-1.0), fp::DomainError);
    }
}
