#ifndef FRACPLASMA_TESTS_ORACLES_HPP
#define FRACPLASMA_TESTS_ORACLES_HPP

// Slow reference implementations kept deliberately independent of the
// library's algorithms: plain composite Simpson in long double, explicit
// symmetric excision for principal values.

#include <cmath>
#include <functional>

namespace oracle {

inline long double simpson(const std::function<long double(long double)>& f,
                           long double a, long double b, int n = 4000)
{
    // n even panels
    const long double h = (b - a) / n;
    long double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += f(a + i * h) * ((i % 2) ? 4.0L : 2.0L);
    return s * h / 3.0L;
}

// D(x) = e^{-x^2} int_0^x e^{t^2} dt; the substitution t = x - s folds
// the exponential growth away: D(x) = int_0^x e^{-2 x s + s^2} ds.
inline double dawson(double x)
{
    const long double ax = std::fabs((long double)x);
    if (ax == 0.0L)
        return 0.0;
    const long double v = simpson(
        [ax](long double s) { return std::exp(s * s - 2.0L * ax * s); }, 0.0L, ax,
        100000);
    return (double)(x < 0 ? -v : v);
}

// Real part of the one-pole velocity integral,
//   PV int_{-L}^{L} z e^{-z^2} / (z - x) dz,
// with the pole excised symmetrically: the window |z - x| < d is folded
// into int_0^d [g(x+t) - g(x-t)] / t dt, which is regular.
inline double response_re_pv(double x, double L = 14.0)
{
    auto g = [](long double z) { return z * std::exp(-z * z); };
    const long double d = 0.5L;
    const long double xl = x;
    auto folded = [&](long double t) {
        if (t == 0.0L)
            return 2.0L * (std::exp(-xl * xl) * (1.0L - 2.0L * xl * xl));
        return (g(xl + t) - g(xl - t)) / t;
    };
    long double s = simpson(folded, 0.0L, d, 4000);
    auto plain = [&](long double z) { return g(z) / (z - xl); };
    s += simpson(plain, -(long double)L, xl - d, 8000);
    s += simpson(plain, xl + d, (long double)L, 8000);
    return (double)s;
}

// Spectral form of the 1-D Riesz Laplacian on exp(-x^2):
//   (1/pi) int_0^inf k^alpha sqrt(pi) e^{-k^2/4} cos(k x) dk
inline double riesz_gaussian_spectral(double alpha, double x)
{
    auto f = [&](long double k) {
        return std::pow(k, (long double)alpha) * std::sqrt((long double)M_PI) *
               std::exp(-k * k / 4.0L) * std::cos(k * (long double)x);
    };
    // k^alpha is integrable at 0 for alpha > -1; start slightly off zero
    // and add the small-k panel analytically to leading order.
    const long double eps = 1e-8L;
    const long double head = std::sqrt((long double)M_PI) *
                             std::pow(eps, (long double)alpha + 1.0L) /
                             ((long double)alpha + 1.0L);
    return (double)((head + simpson(f, eps, 40.0L, 20000)) / (long double)M_PI);
}

// Riemann-Liouville integral of (z - a)^beta over [a, b]:
//   Gamma(beta+1)/Gamma(beta+alpha+1) (b-a)^{beta+alpha}
inline double rl_integral_power(double alpha, double beta, double a, double b)
{
    return std::tgamma(beta + 1.0) / std::tgamma(beta + alpha + 1.0) *
           std::pow(b - a, beta + alpha);
}

} // namespace oracle

#endif
