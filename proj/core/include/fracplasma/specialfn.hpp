#ifndef FRACPLASMA_SPECIALFN_HPP
#define FRACPLASMA_SPECIALFN_HPP

#include <complex>

namespace fracplasma {

using ComplexValue = std::complex<double>;

// Termination control for series evaluation (Mittag-Leffler).
struct SeriesControl {
    int max_terms = 1200;
    double abs_tol = 1e-15;
    double rel_tol = 1e-14;
};

// Euler gamma function. Throws PoleError at non-positive integers.
double gamma_fn(double x);

// Mittag-Leffler function E_alpha(z) = sum_j z^j / Gamma(alpha j + 1),
// real line, alpha in (0, 1]. For alpha = 1 this is exp(z) for any z;
// otherwise the supported domain is |z| <= 5 (Taylor summation).
// Throws DomainError outside the supported domain, ConvergenceError if
// ctrl.max_terms is exhausted.
double mittag_leffler(double alpha, double z, const SeriesControl& ctrl = {});

// Dawson function D(x) = exp(-x^2) int_0^x exp(t^2) dt,
// absolute error below 1e-12 on the whole real line.
double dawson(double x);

// int_R z exp(-z^2) / (z - x - i0) dz
//   = sqrt(pi) (1 - 2 x D(x)) + i pi x exp(-x^2).
ComplexValue plasma_response_integral(double x);

// J_{1/2}(z) = sqrt(2/(pi z)) sin(z), z > 0.
double bessel_j_half(double z);

} // namespace fracplasma

#endif
