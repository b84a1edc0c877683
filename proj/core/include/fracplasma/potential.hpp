#ifndef FRACPLASMA_POTENTIAL_HPP
#define FRACPLASMA_POTENTIAL_HPP

#include "fracplasma/plasma.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracplasma {

// Fourier symbol a0 + sum_k a_k lambda^(alpha_k) of a fractional
// elliptic operator; exponents strictly increasing.
struct PowerLawSymbol {
    double constant = 0.0;
    struct Term {
        double coefficient;
        double exponent;
    };
    std::vector<Term> terms;

    void validate() const;
    double operator()(double lambda) const;
    double largest_exponent() const;
    double smallest_exponent() const;
};

enum class Acceleration { none, alternating_series };
enum class PolePolicy { error, principal_value };

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_half_periods = 10000;
    Acceleration acceleration = Acceleration::alternating_series;
    PolePolicy pole_policy = PolePolicy::error;

    void validate() const;
};

struct PotentialResult {
    double value = 0.0;             // volt
    double correction_factor = 1.0; // value / Coulomb at the same r, Q
    double error_estimate = 0.0;
    int half_periods_used = 0;
    bool pole_encountered = false;
    std::optional<std::string> error; // per-point failure in a sweep
};

enum class CaseTag {
    coulomb,
    debye,
    small_x_two_term,
    small_x_three_term,
    large_x_two_term,
    large_x_three_term
};

struct DispersionCase {
    CaseTag tag;
    FractionalOrder alpha{1.0};
    double omega = 0.0; // 1/s, required by the large-x cases
    PlasmaParameters plasma;
};

CaseTag parse_case_tag(const std::string& name);
std::string case_tag_name(CaseTag tag);

// Denominator symbol of the spectral potential equation for each case.
PowerLawSymbol build_symbol(const DispersionCase& c);

// int_0^inf g(lambda) sin(lambda r) dlambda via half-period partition at
// the sine zeros, Kronrod panels, and Euler acceleration of the
// alternating tail.
struct OscillatoryResult {
    double value;
    double error_estimate;
    int half_periods_used;
};
OscillatoryResult oscillatory_sine_integral(const std::function<double(double)>& g,
                                            double r, const QuadratureSpec& spec,
                                            double lambda_start = 0.0);

// C(r) = (2/pi) int_0^inf lambda sin(lambda r) / P(lambda) dlambda.
// A positive real root of P is handled per spec.pole_policy.
PotentialResult correction_factor(const PowerLawSymbol& sym, double r,
                                  const QuadratureSpec& spec);

// G(r) = r^(-1/2) / (2 pi)^(3/2) int_0^inf lambda^(3/2) J_1/2(lambda r)
//        / P(lambda) dlambda; equals correction_factor / (4 pi r).
double green_function_radial(const PowerLawSymbol& sym, double r,
                             const QuadratureSpec& spec);

// Phi(r) = Q / (4 pi eps0 r) * C(r).
PotentialResult point_charge_potential(const DispersionCase& c, double Q, double r,
                                       const QuadratureSpec& spec);

// Elementwise sweep; per-point failures are recorded, not thrown.
std::vector<PotentialResult> potential_profile(const DispersionCase& c, double Q,
                                               const std::vector<double>& r_grid,
                                               const QuadratureSpec& spec);

} // namespace fracplasma

#endif
