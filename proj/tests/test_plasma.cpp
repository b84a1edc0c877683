#include "doctest.h"

#include "fracplasma/errors.hpp"
#include "fracplasma/plasma.hpp"

#include <cmath>

namespace fp = fracplasma;

namespace {

// All characteristic scales equal to one.
fp::PlasmaParameters unit_plasma()
{
    return {1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
}

} // namespace

TEST_SUITE("plasma")
{
    TEST_CASE("characteristic scales")
    {
        const fp::PlasmaParameters p = unit_plasma();
        CHECK(fp::debye_radius(p) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(fp::langmuir_frequency(p) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(fp::thermal_velocity(p) == doctest::Approx(1.0).epsilon(1e-15));

        fp::PlasmaParameters si = p;
        si.vacuum_permittivity = fp::kVacuumPermittivity;
        si.boltzmann = fp::kBoltzmann;
        si.number_density = 1e18;
        si.charge = 1.602e-19;
        si.mass = 9.109e-31;
        si.temperature = 1e4;
        CHECK(fp::debye_radius(si) > 0.0);
        CHECK(fp::langmuir_frequency(si) > 0.0);

        fp::PlasmaParameters bad = p;
        bad.temperature = -1.0;
        CHECK_THROWS_AS(fp::debye_radius(bad), fp::DomainError);
    }

    TEST_CASE("frequency variable")
    {
        const fp::PlasmaParameters p = unit_plasma();
        // x = omega / (sqrt(2) k^alpha) at unit scales
        CHECK(fp::dimensionless_x({2.0, 1.0, {0.5}}, p) ==
              doctest::Approx(1.0 / (std::sqrt(2.0) * std::sqrt(2.0))).epsilon(1e-14));
        CHECK(fp::dimensionless_x({1.0, 3.0, {0.8}}, p) ==
              doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-14));
        CHECK_THROWS_AS(fp::dimensionless_x({0.0, 1.0, {0.5}}, p), fp::DomainError);
    }

    TEST_CASE("static limit of the exact permittivity")
    {
        const fp::PlasmaParameters p = unit_plasma();
        for (double alpha : {0.5, 0.8, 1.0})
            for (double k : {0.3, 1.0, 4.0}) {
                const auto e = fp::permittivity_exact({k, 0.0, {alpha}}, p);
                CHECK(e.value.real() ==
                      doctest::Approx(1.0 + std::pow(k, -1.0 - alpha)).epsilon(1e-13));
                CHECK(e.value.imag() == 0.0);
            }
    }

    TEST_CASE("exact permittivity assembles the response integral")
    {
        const fp::PlasmaParameters p = unit_plasma();
        const fp::SpectralPoint sp{1.3, 0.7, {0.8}};
        const auto e = fp::permittivity_exact(sp, p);
        const double x = fp::dimensionless_x(sp, p);
        const double pref = 1.0 / std::pow(sp.k_mag, 1.8);
        const fp::ComplexValue w = fp::plasma_response_integral(x);
        CHECK(e.x_used == doctest::Approx(x).epsilon(1e-15));
        CHECK(e.value.real() ==
              doctest::Approx(1.0 + pref * w.real() / std::sqrt(M_PI)).epsilon(1e-14));
        CHECK(e.value.imag() ==
              doctest::Approx(pref * w.imag() / std::sqrt(M_PI)).epsilon(1e-14));
    }

    TEST_CASE("expansions approach the exact value in their domains")
    {
        const fp::PlasmaParameters p = unit_plasma();
        // small x: k fixed, omega chosen for x = 0.05
        {
            const double x = 0.05;
            const fp::SpectralPoint sp{1.0, std::sqrt(2.0) * x, {0.7}};
            const auto exact = fp::permittivity_exact(sp, p);
            double prev = 1e300;
            for (int n = 1; n <= 3; ++n) {
                const auto approx = fp::permittivity_small_x(sp, p, n);
                const double err = std::fabs(approx.value.real() - exact.value.real());
                CHECK(err < prev);
                prev = err;
            }
            CHECK(prev < 1e-8);
        }
        // large x = 10
        {
            const fp::SpectralPoint sp{1.0, std::sqrt(2.0) * 10.0, {0.7}};
            const auto exact = fp::permittivity_exact(sp, p);
            const auto two = fp::permittivity_large_x(sp, p, 2);
            CHECK(std::fabs(two.value.real() - exact.value.real()) /
                      std::fabs(exact.value.real() - 1.0) <
                  1e-2);
        }
    }

    TEST_CASE("expansion domain guards")
    {
        const fp::PlasmaParameters p = unit_plasma();
        const fp::SpectralPoint fast{1.0, 3.0, {0.5}};  // x > 1
        const fp::SpectralPoint slow{1.0, 0.1, {0.5}};  // x < 1
        CHECK_THROWS_AS(fp::permittivity_small_x(fast, p, 3), fp::DomainError);
        CHECK_THROWS_AS(fp::permittivity_large_x(slow, p, 2), fp::DomainError);
        CHECK_THROWS_AS(fp::permittivity_small_x(slow, p, 4), fp::DomainError);
        CHECK_THROWS_AS(fp::permittivity_large_x(fast, p, 3), fp::DomainError);
    }

    TEST_CASE("dissipative part of the exact permittivity")
    {
        const fp::PlasmaParameters p = unit_plasma();
        for (double x : {0.5, 3.0, 5.0}) {
            const fp::SpectralPoint sp{1.0, std::sqrt(2.0) * x, {0.6}};
            const auto e = fp::permittivity_exact(sp, p);
            CHECK(e.value.imag() ==
                  doctest::Approx(std::sqrt(M_PI) * x * std::exp(-x * x))
                      .epsilon(1e-10));
        }
    }

    TEST_CASE("single-momentum response")
    {
        const fp::PlasmaParameters p = unit_plasma();
        const fp::SpectralPoint sp{2.0, 1.0, {0.5}};
        const auto r = fp::perturbation_response(0.5, 0.3, sp, p);
        // i (k^alpha v - omega) delta + q E drho0 = 0
        const double kBT = 1.0;
        const double rho0 = 1.0 / std::sqrt(2.0 * M_PI) * std::exp(-0.3 * 0.3 / 2.0);
        const double drho0 = -0.3 / kBT * rho0;
        const double denom = std::pow(2.0, 0.5) * 0.3 - 1.0;
        const fp::ComplexValue residual =
            fp::ComplexValue{0.0, denom} * r.delta_rho +
            fp::ComplexValue{0.5 * drho0, 0.0};
        CHECK(std::abs(residual) < 1e-14);

        // resonant momentum: k^alpha v = omega
        const double p_res = 1.0 / std::pow(2.0, 0.5);
        CHECK_THROWS_AS(fp::perturbation_response(0.5, p_res, sp, p),
                        fp::ResonanceError);
        CHECK(std::abs(fp::perturbation_response(0.0, 0.3, sp, p).delta_rho) == 0.0);
    }
}
