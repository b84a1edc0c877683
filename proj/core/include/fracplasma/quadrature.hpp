#ifndef FRACPLASMA_QUADRATURE_HPP
#define FRACPLASMA_QUADRATURE_HPP

#include <functional>

namespace fracplasma {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval.
// Throws QuadratureError if the subdivision limit is hit before the
// requested tolerance is met.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              double abs_tol = 1e-12,
                              double rel_tol = 1e-12,
                              int max_depth = 48);

// Same rule without subdivision; used where the integrand is known smooth.
QuadResult gauss_kronrod_15(const std::function<double(double)>& f,
                            double a, double b);

// Integral over [a, b] of an integrand with an integrable power-law
// singularity at the left endpoint: intervals shrink geometrically
// toward a until the contribution is below tolerance.
QuadResult integrate_left_singular(const std::function<double(double)>& f,
                                   double a, double b,
                                   double abs_tol = 1e-12,
                                   double rel_tol = 1e-12);

// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

} // namespace fracplasma

#endif
