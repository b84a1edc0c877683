#include "doctest.h"
#include "oracles.hpp"

#include "fracplasma/errors.hpp"
#include "fracplasma/fraccalc.hpp"
#include "fracplasma/specialfn.hpp"

#include <cmath>

namespace fp = fracplasma;

TEST_SUITE("fraccalc")
{
    TEST_CASE("power rule closed form")
    {
        // d^alpha (x-a)^beta = Gamma(beta+1)/Gamma(beta-alpha+1) (x-a)^(beta-alpha)
        CHECK(fp::caputo_power_rule({0.5}, 1.0, 2.0, 0.0) ==
              doctest::Approx(std::tgamma(2.0) / std::tgamma(1.5) * std::sqrt(2.0))
                  .epsilon(1e-14));
        CHECK(fp::caputo_power_rule({0.5}, 0.0, 1.0, 0.0) == 0.0);
        // beta = alpha gives a constant Gamma(alpha+1)
        CHECK(fp::caputo_power_rule({0.3}, 0.3, 5.0, 1.0) ==
              doctest::Approx(std::tgamma(1.3)).epsilon(1e-14));
        CHECK_THROWS_AS(fp::caputo_power_rule({1.5}, 1.0, 2.0, 0.0), fp::DomainError);
        CHECK_THROWS_AS(fp::caputo_power_rule({0.5}, 1.0, 0.0, 0.0), fp::DomainError);
    }

    TEST_CASE("numeric derivative matches the power rule")
    {
        for (double alpha : {0.3, 0.5, 0.8})
            for (double beta : {1.0, 2.0, 2.5})
                for (double x : {0.5, 1.0, 1.9}) {
                    fp::SampledFunction f{
                        [beta](double t) { return std::pow(t, beta); }, 0.0, 2.0};
                    const double num = fp::caputo_numeric(f, {alpha}, x);
                    const double ref = fp::caputo_power_rule({alpha}, beta, x, 0.0);
                    CHECK(std::fabs(num - ref) / (1.0 + std::fabs(ref)) < 1e-7);
                }
    }

    TEST_CASE("derivative of a constant vanishes")
    {
        fp::SampledFunction f{[](double) { return 3.7; }, 0.0, 2.0};
        for (double alpha : {0.2, 0.5, 0.9})
            CHECK(std::fabs(fp::caputo_numeric(f, {alpha}, 1.3)) < 1e-9);
    }

    TEST_CASE("mittag-leffler eigenproperty")
    {
        // d^alpha E_alpha(l x^alpha) = l E_alpha(l x^alpha)
        for (double alpha : {0.4, 0.6})
            for (double lam : {0.5, 1.5}) {
                fp::SampledFunction f{[alpha, lam](double t) {
                                          return fp::mittag_leffler(
                                              alpha, lam * std::pow(t, alpha));
                                      },
                                      0.0, 2.1};
                const double x = 1.2;
                const double lhs = fp::caputo_numeric(f, {alpha}, x);
                const double rhs =
                    lam * fp::mittag_leffler(alpha, lam * std::pow(x, alpha));
                CHECK(std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs)) < 1e-4);
            }
    }

    TEST_CASE("integral operator closed form and composition")
    {
        // I^alpha of (z-a)^beta over [a, b]
        for (double alpha : {0.4, 0.7})
            for (double beta : {0.0, 1.0, 2.0}) {
                fp::SampledFunction f{
                    [beta](double t) { return std::pow(t, beta); }, 0.0, 1.5};
                const double got =
                    fp::riemann_liouville_integral(f, {alpha}, 0.0, 1.5);
                CHECK(got == doctest::Approx(
                                 oracle::rl_integral_power(alpha, beta, 0.0, 1.5))
                                 .epsilon(1e-8));
            }

        // I^alpha (d^alpha F) = F(b) - F(a) for F with F'(a) finite
        auto F = [](double t) { return t * t * std::exp(-t); };
        for (double alpha : {0.4, 0.7}) {
            fp::SampledFunction dF{[alpha, F](double t) {
                                       if (t <= 1e-14)
                                           return 0.0;
                                       fp::SampledFunction g{F, 0.0, 2.0};
                                       return fp::caputo_numeric(g, {alpha}, t);
                                   },
                                   0.0, 2.0};
            const double got = fp::riemann_liouville_integral(dF, {alpha}, 0.0, 2.0);
            CHECK(got == doctest::Approx(F(2.0) - F(0.0)).epsilon(1e-6));
        }
    }

    TEST_CASE("symbol of the symmetric operator")
    {
        CHECK(fp::riesz_symbol({0.5}, 0.0) == 0.0);
        CHECK(fp::riesz_symbol({0.5}, 4.0) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(fp::riesz_symbol({2.0}, 3.0) == doctest::Approx(9.0).epsilon(1e-15));
        CHECK_THROWS_AS(fp::riesz_symbol({0.5}, -1.0), fp::DomainError);
    }

    TEST_CASE("hypersingular form against the spectral answer on a gaussian")
    {
        fp::SampledFunction f{[](double t) { return std::exp(-t * t); }, -12.0, 12.0};
        for (double alpha : {0.4, 1.0, 1.6})
            for (double x : {0.0, 0.7}) {
                const double got =
                    fp::riesz_laplacian_1d_hypersingular(f, {alpha}, x, 2);
                const double ref = oracle::riesz_gaussian_spectral(alpha, x);
                CHECK(std::fabs(got - ref) < 1e-4);
            }
    }

    TEST_CASE("hypersingular form is insensitive to the difference order")
    {
        fp::SampledFunction f{[](double t) { return std::exp(-t * t); }, -12.0, 12.0};
        for (double alpha : {0.4, 1.6}) {
            const double m2 = fp::riesz_laplacian_1d_hypersingular(f, {alpha}, 0.5, 2);
            const double m3 = fp::riesz_laplacian_1d_hypersingular(f, {alpha}, 0.5, 3);
            CHECK(std::fabs(m2 - m3) < 1e-4);
        }
        CHECK_THROWS_AS(fp::riesz_laplacian_1d_hypersingular(f, {1.6}, 0.0, 1),
                        fp::DomainError);
        CHECK_THROWS_AS(fp::riesz_laplacian_1d_hypersingular(f, {2.0}, 0.0, 3),
                        fp::DomainError);
    }
}
