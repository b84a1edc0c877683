#ifndef FRACPLASMA_PLASMA_HPP
#define FRACPLASMA_PLASMA_HPP

#include "fracplasma/fraccalc.hpp"
#include "fracplasma/specialfn.hpp"

namespace fracplasma {

// Physical constants (SI).
inline constexpr double kBoltzmann = 1.38065e-23;      // J/K
inline constexpr double kVacuumPermittivity = 8.854e-12; // F/m

// Medium constants, all SI and strictly positive.
struct PlasmaParameters {
    double number_density;   // 1/m^3
    double charge;           // C
    double mass;             // kg
    double temperature;      // K
    double vacuum_permittivity = kVacuumPermittivity; // F/m
    double boltzmann = kBoltzmann;                    // J/K

    void validate() const;
};

// (|k|, omega, alpha) evaluation point.
struct SpectralPoint {
    double k_mag;   // wavenumber magnitude, > 0
    double omega;   // angular frequency
    FractionalOrder alpha;
};

enum class PermittivityMethod { exact, small_x, large_x };

struct ComplexPermittivity {
    ComplexValue value;        // F/m
    PermittivityMethod method;
    double x_used;
};

// Linear response of the distribution function at one momentum.
struct PerturbationResponse {
    ComplexValue delta_rho;
    double field_amplitude;
    double momentum;
    SpectralPoint point;
};

// sqrt(eps0 kB T / (N q^2))
double debye_radius(const PlasmaParameters& p);

// sqrt(N q^2 / (m eps0))
double langmuir_frequency(const PlasmaParameters& p);

// sqrt(kB T / m)
double thermal_velocity(const PlasmaParameters& p);

// x = sqrt(m / (2 kB T)) * omega / |k|^alpha
double dimensionless_x(const SpectralPoint& sp, const PlasmaParameters& p);

// delta rho = -q E drho0/dp_x / (i (|k|^alpha v_x - omega)) for the 1-D
// Maxwellian rho0. Throws ResonanceError on the Landau pole.
PerturbationResponse perturbation_response(double field_amplitude, double p_x,
                                           const SpectralPoint& sp,
                                           const PlasmaParameters& p);

// eps0 + eps0 / (r_D^2 |k|^(1+alpha)) * W(x)/sqrt(pi), with W the
// full complex plasma response integral (+i0 realized analytically).
ComplexPermittivity permittivity_exact(const SpectralPoint& sp,
                                       const PlasmaParameters& p);

// Small-x power series, 1..3 terms beyond eps0. The third term carries
// the x^4 Taylor coefficient 4/3 of the response integral.
ComplexPermittivity permittivity_small_x(const SpectralPoint& sp,
                                         const PlasmaParameters& p, int n_terms);

// Large-x asymptotic series, 1..2 terms beyond eps0. Requires x > 1.
ComplexPermittivity permittivity_large_x(const SpectralPoint& sp,
                                         const PlasmaParameters& p, int n_terms);

} // namespace fracplasma

#endif
