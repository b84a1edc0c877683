#include "doctest.h"

#include "fracplasma/errors.hpp"
#include "fracplasma/quadrature.hpp"

#include <cmath>

namespace fp = fracplasma;

TEST_SUITE("quadrature")
{
    TEST_CASE("adaptive rule on smooth integrands")
    {
        const fp::QuadResult q =
            fp::integrate_adaptive([](double t) { return std::exp(-t * t); }, 0.0, 6.0);
        CHECK(q.value == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-13));
        CHECK(q.error_estimate >= 0.0);

        const fp::QuadResult s =
            fp::integrate_adaptive([](double t) { return std::sin(t); }, 0.0, M_PI);
        CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
    }

    TEST_CASE("halving the tolerance does not worsen the result")
    {
        auto f = [](double t) { return std::cos(10.0 * t) / (1.0 + t * t); };
        const fp::QuadResult loose = fp::integrate_adaptive(f, 0.0, 5.0, 1e-6, 1e-6);
        const fp::QuadResult tight = fp::integrate_adaptive(f, 0.0, 5.0, 5e-7, 5e-7);
        const fp::QuadResult ref = fp::integrate_adaptive(f, 0.0, 5.0, 1e-13, 1e-13);
        CHECK(std::fabs(loose.value - ref.value) <= 1e-6);
        CHECK(std::fabs(tight.value - ref.value) <=
              std::max(1e-12, std::fabs(loose.value - ref.value)));
    }

    TEST_CASE("left-endpoint singularity")
    {
        // int_0^1 t^(-1/2) dt = 2
        const fp::QuadResult q = fp::integrate_left_singular(
            [](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0);
        CHECK(q.value == doctest::Approx(2.0).epsilon(1e-10));

        // int_0^2 t^(-0.9) dt = 2^0.1 / 0.1
        const fp::QuadResult p = fp::integrate_left_singular(
            [](double t) { return std::pow(t, -0.9); }, 0.0, 2.0);
        CHECK(p.value == doctest::Approx(std::pow(2.0, 0.1) / 0.1).epsilon(1e-9));
    }

    TEST_CASE("sine integral reference values")
    {
        CHECK(fp::sine_integral(1.0) ==
              doctest::Approx(0.946083070367183).epsilon(1e-13));
        CHECK(fp::sine_integral(10.0) ==
              doctest::Approx(1.6583475942188740).epsilon(1e-13));
        CHECK(fp::sine_integral(30.0) ==
              doctest::Approx(1.5667565400303511).epsilon(1e-13));
        CHECK(fp::sine_integral(0.0) == 0.0);
        CHECK(fp::sine_integral(-1.0) ==
              doctest::Approx(-fp::sine_integral(1.0)).epsilon(1e-15));
        CHECK(fp::sine_integral(1e4) == doctest::Approx(M_PI / 2).epsilon(1e-3));
    }
}
