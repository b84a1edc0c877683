#include "fracplasma/fraccalc.hpp"
#include "fracplasma/errors.hpp"
#include "fracplasma/quadrature.hpp"
#include "fracplasma/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fracplasma {

namespace {

void check_caputo_order(FractionalOrder alpha)
{
    if (!(alpha.value > 0.0) || !(alpha.value < 1.0))
        throw DomainError("caputo order must lie in (0, 1)");
}

// Central difference of the sampled evaluator, with the step shrunk near
// the domain ends so samples stay inside [a, b].
double sampled_derivative(const SampledFunction& f, double z)
{
    const double span = f.b - f.a;
    double h = f.derivative_step * span;
    h = std::min(h, 0.01 * (z - f.a));
    h = std::min(h, 0.01 * (f.b - z));
    h = std::max(h, 1e-13 * span);
    if (z - h < f.a)
        return (-3.0 * f.evaluator(z) + 4.0 * f.evaluator(z + h) - f.evaluator(z + 2.0 * h)) / (2.0 * h);
    if (z + h > f.b)
        return (3.0 * f.evaluator(z) - 4.0 * f.evaluator(z - h) + f.evaluator(z - 2.0 * h)) / (2.0 * h);
    return (f.evaluator(z + h) - f.evaluator(z - h)) / (2.0 * h);
}

std::vector<double> binomials(int m)
{
    std::vector<double> c(m + 1, 1.0);
    for (int j = 1; j <= m; ++j)
        c[j] = c[j - 1] * double(m - j + 1) / double(j);
    return c;
}

double riesz_value(const SampledFunction& f, double alpha, double x, int m);

} // namespace

double caputo_power_rule(FractionalOrder alpha, double beta, double x, double a)
{
    check_caputo_order(alpha);
    if (!(x > a))
        throw DomainError("caputo_power_rule: requires x > a");
    if (!(beta > -1.0))
        throw DomainError("caputo_power_rule: requires beta > -1");
    if (beta == 0.0)
        return 0.0;
    const double denom_arg = beta - alpha.value + 1.0;
    if (denom_arg <= 0.0 && denom_arg == std::floor(denom_arg))
        return 0.0; // Gamma pole in the denominator
    return gamma_fn(beta + 1.0) / gamma_fn(denom_arg) *
           std::pow(x - a, beta - alpha.value);
}

double caputo_numeric(const SampledFunction& f, FractionalOrder alpha, double x)
{
    check_caputo_order(alpha);
    if (!(x > f.a) || x > f.b)
        throw DomainError("caputo_numeric: x must lie in (a, b]");
    const double al = alpha.value;
    const double one_m = 1.0 - al;
    const double u_max = std::pow(x - f.a, one_m);

    // u = (x - z)^(1-alpha) absorbs the kernel singularity at z = x;
    // a residual derivative singularity of f at z = a maps to the right
    // endpoint, handled by geometric refinement.
    auto integrand = [&](double s) {
        const double u = u_max - s;
        // Rounding in the inverse substitution can land a hair outside [a, x].
        const double z = std::clamp(x - std::pow(u, 1.0 / one_m), f.a, x);
        return sampled_derivative(f, z);
    };
    const QuadResult q = integrate_left_singular(integrand, 0.0, u_max, 1e-11, 1e-10);
    return q.value / (one_m * gamma_fn(one_m));
}

double riemann_liouville_integral(const SampledFunction& f, FractionalOrder alpha,
                                  double a, double b)
{
    const double al = alpha.value;
    if (!(al > 0.0) || al > 1.0)
        throw DomainError("riemann_liouville_integral: order must lie in (0, 1]");
    if (!(b > a))
        throw DomainError("riemann_liouville_integral: requires b > a");

    // u = (b - z)^alpha removes the kernel singularity at z = b.
    const double u_max = std::pow(b - a, al);
    auto integrand = [&](double u) {
        const double z = b - std::pow(u, 1.0 / al);
        return f.evaluator(z);
    };
    const QuadResult q = integrate_adaptive(integrand, 0.0, u_max, 1e-12, 1e-11);
    return q.value / (al * gamma_fn(al));
}

double riesz_symbol(FractionalOrder alpha, double k_mag)
{
    if (k_mag < 0.0)
        throw DomainError("riesz_symbol: k_mag must be non-negative");
    if (k_mag == 0.0)
        return 0.0;
    return std::pow(k_mag, alpha.value);
}

double riesz_normalization_1d(int m, double alpha)
{
    const auto c = binomials(m);
    double A = 0.0;
    for (int j = 1; j <= m; ++j)
        A += (j % 2 == 1 ? 1.0 : -1.0) * c[j] * std::pow(double(j), alpha);
    return std::pow(M_PI, 1.5) * A /
           (std::pow(2.0, alpha) * gamma_fn(1.0 + 0.5 * alpha) *
            gamma_fn(0.5 + 0.5 * alpha) * std::sin(0.5 * M_PI * alpha));
}

namespace {

double riesz_value(const SampledFunction& f, double alpha, double x, int m)
{
    const auto c = binomials(m);
    // Non-centered difference sum_j (-1)^j C(m,j) f(x - j z), plus its
    // mirror, divided by z^(alpha+1), over z in (0, inf).
    auto sym_diff = [&](double z) {
        double s = 0.0;
        for (int j = 0; j <= m; ++j) {
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            s += sgn * c[j] * (f.evaluator(x - j * z) + f.evaluator(x + j * z));
        }
        return s;
    };

    const double Z = std::max(std::fabs(x - f.a), std::fabs(f.b - x));
    const double z_min = 1e-4 * Z;

    // Below z_min the difference is modelled as c_m z^m to dodge the
    // cancellation floor of the finite difference.
    const double c_m = sym_diff(z_min) / std::pow(z_min, m);
    const double near0 = c_m * std::pow(z_min, m - alpha) / (m - alpha);

    auto integrand = [&](double z) { return sym_diff(z) / std::pow(z, alpha + 1.0); };
    const QuadResult q = integrate_adaptive(integrand, z_min, Z, 1e-11, 1e-10);

    // For z > Z only the j = 0 terms survive (f decayed).
    const double tail = 2.0 * f.evaluator(x) * std::pow(Z, -alpha) / alpha;

    return (near0 + q.value + tail) / riesz_normalization_1d(m, alpha);
}

} // namespace

double riesz_laplacian_1d_hypersingular(const SampledFunction& f,
                                        FractionalOrder alpha, double x, int m)
{
    const double al = alpha.value;
    if (!(al > 0.0) || !(al < 2.0))
        throw DomainError("riesz_laplacian_1d_hypersingular: order must lie in (0, 2)");
    if (!(m > al))
        throw DomainError("riesz_laplacian_1d_hypersingular: requires m > alpha");

    // A_m(alpha) vanishes at odd integer orders; the operator itself is
    // continuous there, so take the symmetric limit in alpha.
    if (std::fabs(al - 1.0) < 1e-6) {
        const double d = 3e-3;
        return 0.5 * (riesz_value(f, al - d, x, m) + riesz_value(f, al + d, x, m));
    }
    return riesz_value(f, al, x, m);
}

} // namespace fracplasma
