#include "fracplasma/plasma.hpp"
#include "fracplasma/errors.hpp"

#include <cmath>
#include <iostream>

namespace fracplasma {

void PlasmaParameters::validate() const
{
    if (!(number_density > 0.0) || !(charge != 0.0) || !(mass > 0.0) ||
        !(temperature > 0.0) || !(vacuum_permittivity > 0.0) || !(boltzmann > 0.0))
        throw DomainError("PlasmaParameters: all fields must be positive (charge non-zero)");
}

double debye_radius(const PlasmaParameters& p)
{
    p.validate();
    return std::sqrt(p.vacuum_permittivity * p.boltzmann * p.temperature /
                     (p.number_density * p.charge * p.charge));
}

double langmuir_frequency(const PlasmaParameters& p)
{
    p.validate();
    return std::sqrt(p.number_density * p.charge * p.charge /
                     (p.mass * p.vacuum_permittivity));
}

double thermal_velocity(const PlasmaParameters& p)
{
    p.validate();
    return std::sqrt(p.boltzmann * p.temperature / p.mass);
}

double dimensionless_x(const SpectralPoint& sp, const PlasmaParameters& p)
{
    if (!(sp.k_mag > 0.0))
        throw DomainError("dimensionless_x: k_mag must be positive");
    return std::sqrt(p.mass / (2.0 * p.boltzmann * p.temperature)) * sp.omega /
           std::pow(sp.k_mag, sp.alpha.value);
}

PerturbationResponse perturbation_response(double field_amplitude, double p_x,
                                           const SpectralPoint& sp,
                                           const PlasmaParameters& p)
{
    p.validate();
    if (!(sp.k_mag > 0.0))
        throw DomainError("perturbation_response: k_mag must be positive");
    if (field_amplitude == 0.0)
        return {ComplexValue{0.0, 0.0}, field_amplitude, p_x, sp};

    const double kBT = p.boltzmann * p.temperature;
    const double norm = p.number_density / std::sqrt(2.0 * M_PI * p.mass * kBT);
    const double rho0 = norm * std::exp(-p_x * p_x / (2.0 * p.mass * kBT));
    const double drho0 = -p_x / (p.mass * kBT) * rho0;

    const double v_x = p_x / p.mass;
    const double denom = std::pow(sp.k_mag, sp.alpha.value) * v_x - sp.omega;
    const double scale = std::max({std::fabs(sp.omega),
                                   std::fabs(std::pow(sp.k_mag, sp.alpha.value) * v_x),
                                   1e-300});
    if (std::fabs(denom) < 1e-12 * scale)
        throw ResonanceError("perturbation_response: Landau resonance, use the +i0 permittivity path");

    // delta rho = - q E drho0 / (i denom) = i q E drho0 / denom.
    const ComplexValue delta{0.0, p.charge * field_amplitude * drho0 / denom};
    return {delta, field_amplitude, p_x, sp};
}

namespace {

// eps0 / (r_D^2 |k|^(1+alpha)) = q^2 N / (kB T |k|^(1+alpha))
double screening_prefactor(const SpectralPoint& sp, const PlasmaParameters& p)
{
    const double r_d = debye_radius(p);
    return p.vacuum_permittivity /
           (r_d * r_d * std::pow(sp.k_mag, 1.0 + sp.alpha.value));
}

double landau_imaginary(double prefactor, double x)
{
    return prefactor * std::sqrt(M_PI) * x * std::exp(-x * x);
}

} // namespace

ComplexPermittivity permittivity_exact(const SpectralPoint& sp,
                                       const PlasmaParameters& p)
{
    if (!(sp.k_mag > 0.0))
        throw DomainError("permittivity_exact: k_mag must be positive");
    const double pref = screening_prefactor(sp, p);
    if (sp.omega == 0.0) {
        // Static limit, W(0) = sqrt(pi) exactly.
        return {ComplexValue{p.vacuum_permittivity + pref, 0.0},
                PermittivityMethod::exact, 0.0};
    }
    const double x = dimensionless_x(sp, p);
    const ComplexValue w = plasma_response_integral(x);
    const ComplexValue eps = ComplexValue{p.vacuum_permittivity, 0.0} +
                             pref / std::sqrt(M_PI) * w;
    return {eps, PermittivityMethod::exact, x};
}

ComplexPermittivity permittivity_small_x(const SpectralPoint& sp,
                                         const PlasmaParameters& p, int n_terms)
{
    if (n_terms < 1 || n_terms > 3)
        throw DomainError("permittivity_small_x: n_terms must be 1, 2 or 3");
    if (!(sp.k_mag > 0.0))
        throw DomainError("permittivity_small_x: k_mag must be positive");
    const double x = dimensionless_x(sp, p);
    if (!(x < 1.0))
        throw DomainError("permittivity_small_x: requires x < 1");
    if (x > 0.3)
        std::cerr << "permittivity_small_x: x = " << x
                  << " is marginal for the small-x expansion\n";

    const double pref = screening_prefactor(sp, p);
    // W(x).re/sqrt(pi) = 1 - 2 x^2 + (4/3) x^4 - ...
    double series = 1.0;
    if (n_terms >= 2)
        series -= 2.0 * x * x;
    if (n_terms >= 3)
        series += 4.0 / 3.0 * x * x * x * x;

    return {ComplexValue{p.vacuum_permittivity + pref * series,
                         landau_imaginary(pref, x)},
            PermittivityMethod::small_x, x};
}

ComplexPermittivity permittivity_large_x(const SpectralPoint& sp,
                                         const PlasmaParameters& p, int n_terms)
{
    if (n_terms < 1 || n_terms > 2)
        throw DomainError("permittivity_large_x: n_terms must be 1 or 2");
    if (!(sp.k_mag > 0.0))
        throw DomainError("permittivity_large_x: k_mag must be positive");
    const double x = dimensionless_x(sp, p);
    if (!(x > 1.0))
        throw DomainError("permittivity_large_x: requires x > 1");

    const double pref = screening_prefactor(sp, p);
    // W(x).re/sqrt(pi) = -1/(2 x^2) - 3/(4 x^4) - ...
    double series = -0.5 / (x * x);
    if (n_terms >= 2)
        series -= 0.75 / (x * x * x * x);

    return {ComplexValue{p.vacuum_permittivity + pref * series,
                         landau_imaginary(pref, x)},
            PermittivityMethod::large_x, x};
}

} // namespace fracplasma
