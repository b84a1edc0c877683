#ifndef FRACPLASMA_FRACCALC_HPP
#define FRACPLASMA_FRACCALC_HPP

#include <functional>

namespace fracplasma {

// Fractional order; Caputo operations use (0, 1), Riesz exponents (0, 2).
struct FractionalOrder {
    double value;
};

// A scalar function together with the interval it is evaluated on.
struct SampledFunction {
    std::function<double(double)> evaluator;
    double a = 0.0;
    double b = 1.0;
    // Step for central differences of the evaluator, relative to (b - a).
    double derivative_step = 1e-5;
};

// Caputo derivative of (x - a)^beta of order alpha:
//   Gamma(beta + 1) / Gamma(beta - alpha + 1) * (x - a)^(beta - alpha),
// zero for beta = 0. (A published variant of this rule carries
// Gamma(alpha + beta + 1) in the denominator; that form contradicts both
// the vanishing-on-constants property and the Mittag-Leffler
// eigenproperty, so the standard denominator is used here.)
double caputo_power_rule(FractionalOrder alpha, double beta, double x, double a);

// Caputo derivative of order alpha in (0, 1) at x:
//   (1 / Gamma(1 - alpha)) int_a^x f'(z) (x - z)^(-alpha) dz.
// The endpoint singularity is removed by the substitution u = (x-z)^(1-alpha).
double caputo_numeric(const SampledFunction& f, FractionalOrder alpha, double x);

// Riemann-Liouville integral of order alpha in (0, 1]:
//   (1 / Gamma(alpha)) int_a^b f(z) (b - z)^(alpha - 1) dz.
double riemann_liouville_integral(const SampledFunction& f, FractionalOrder alpha,
                                  double a, double b);

// 1-D Riesz fractional Laplacian (-Delta)^(alpha/2) f at x via the
// hypersingular integral with an order-m finite difference, m > alpha.
double riesz_laplacian_1d_hypersingular(const SampledFunction& f,
                                        FractionalOrder alpha, double x, int m);

// Fourier symbol |k|^alpha of the Riesz Laplacian, with 0^alpha = 0.
double riesz_symbol(FractionalOrder alpha, double k_mag);

// Normalization d_n(m, alpha) of the hypersingular form, n = 1.
double riesz_normalization_1d(int m, double alpha);

} // namespace fracplasma

#endif
