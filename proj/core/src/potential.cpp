#include "fracplasma/potential.hpp"
#include "fracplasma/errors.hpp"
#include "fracplasma/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace fracplasma {

void PowerLawSymbol::validate() const
{
    if (terms.empty())
        throw DomainError("PowerLawSymbol: at least one term required");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].exponent < 0.0)
            throw DomainError("PowerLawSymbol: exponents must be non-negative");
        if (i > 0 && !(terms[i].exponent > terms[i - 1].exponent))
            throw DomainError("PowerLawSymbol: exponents must be strictly increasing");
    }
    if (terms.back().coefficient == 0.0)
        throw DomainError("PowerLawSymbol: leading coefficient must be non-zero");
}

double PowerLawSymbol::operator()(double lambda) const
{
    double p = constant;
    for (const auto& t : terms)
        p += t.coefficient * std::pow(lambda, t.exponent);
    return p;
}

double PowerLawSymbol::largest_exponent() const { return terms.back().exponent; }
double PowerLawSymbol::smallest_exponent() const { return terms.front().exponent; }

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_half_periods < 8)
        throw DomainError("QuadratureSpec: max_half_periods must be >= 8");
}

CaseTag parse_case_tag(const std::string& name)
{
    if (name == "coulomb") return CaseTag::coulomb;
    if (name == "debye") return CaseTag::debye;
    if (name == "small_x_two_term") return CaseTag::small_x_two_term;
    if (name == "small_x_three_term") return CaseTag::small_x_three_term;
    if (name == "large_x_two_term") return CaseTag::large_x_two_term;
    if (name == "large_x_three_term") return CaseTag::large_x_three_term;
    throw DomainError("unknown dispersion case '" + name + "'");
}

std::string case_tag_name(CaseTag tag)
{
    switch (tag) {
    case CaseTag::coulomb: return "coulomb";
    case CaseTag::debye: return "debye";
    case CaseTag::small_x_two_term: return "small_x_two_term";
    case CaseTag::small_x_three_term: return "small_x_three_term";
    case CaseTag::large_x_two_term: return "large_x_two_term";
    case CaseTag::large_x_three_term: return "large_x_three_term";
    }
    throw DomainError("unknown dispersion case tag");
}

namespace {

// Sort, merge equal exponents, fold exponent-zero terms into the
// constant, drop exact zeros.
PowerLawSymbol normalize_symbol(double constant, std::vector<PowerLawSymbol::Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
    PowerLawSymbol sym;
    sym.constant = constant;
    for (const auto& t : terms) {
        if (t.coefficient == 0.0)
            continue;
        if (t.exponent == 0.0) {
            sym.constant += t.coefficient;
            continue;
        }
        if (!sym.terms.empty() && sym.terms.back().exponent == t.exponent)
            sym.terms.back().coefficient += t.coefficient;
        else
            sym.terms.push_back(t);
    }
    std::erase_if(sym.terms, [](const auto& t) { return t.coefficient == 0.0; });
    sym.validate();
    return sym;
}

} // namespace

PowerLawSymbol build_symbol(const DispersionCase& c)
{
    c.plasma.validate();
    const double al = c.alpha.value;
    const double r_d = debye_radius(c.plasma);
    const double om_l = langmuir_frequency(c.plasma);

    switch (c.tag) {
    case CaseTag::coulomb:
        return normalize_symbol(0.0, {{1.0, 2.0}});
    case CaseTag::debye:
        return normalize_symbol(1.0 / (r_d * r_d), {{1.0, 2.0}});
    case CaseTag::small_x_two_term:
        if (!(al > 0.0) || al > 1.0)
            throw CaseInvariantError("small_x_two_term: requires 0 < alpha <= 1");
        return normalize_symbol(0.0, {{1.0, 2.0}, {1.0 / (r_d * r_d), 1.0 - al}});
    case CaseTag::small_x_three_term: {
        if (!(al > 0.0) || !(al < 1.0 / 3.0))
            throw CaseInvariantError("small_x_three_term: requires 0 < alpha < 1/3");
        const double a1 = 1.0 / (r_d * r_d);
        const double a2 = c.omega * c.omega / (std::pow(r_d, 4) * om_l * om_l);
        return normalize_symbol(0.0, {{1.0, 2.0}, {a1, 1.0 - al}, {-a2, 1.0 - 3.0 * al}});
    }
    case CaseTag::large_x_two_term: {
        if (!(c.omega > 0.0))
            throw CaseInvariantError("large_x_two_term: requires omega > 0");
        if (!(al > 0.0) || al > 1.0)
            throw CaseInvariantError("large_x_two_term: requires 0 < alpha <= 1");
        const double b1 = om_l * om_l / (c.omega * c.omega);
        return normalize_symbol(0.0, {{1.0, 2.0}, {-b1, al + 1.0}});
    }
    case CaseTag::large_x_three_term: {
        if (!(c.omega > 0.0))
            throw CaseInvariantError("large_x_three_term: requires omega > 0");
        if (!(al > 0.0) || al > 1.0)
            throw CaseInvariantError("large_x_three_term: requires 0 < alpha <= 1");
        const double b1 = om_l * om_l / (c.omega * c.omega);
        const double b2 = 3.0 * r_d * r_d * std::pow(om_l, 4) / std::pow(c.omega, 4);
        return normalize_symbol(0.0, {{1.0, 2.0}, {-b1, al + 1.0}, {-b2, 3.0 * al + 1.0}});
    }
    }
    throw CaseInvariantError("unknown dispersion case tag");
}

namespace {

// -------- oscillatory engine internals --------

// Euler transform of an alternating tail: repeated averaging of the
// partial sums. Returns (limit, error estimate).
std::pair<double, double> euler_accelerate(const std::vector<double>& tail_terms)
{
    const std::size_t n = tail_terms.size();
    std::vector<double> s(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += tail_terms[i];
        s[i] = acc;
    }
    double prev = s.back();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i)
            s[i] = 0.5 * (s[i] + s[i + 1]);
        const double cur = s[0];
        if (level + 1 == n || std::fabs(cur - prev) < 1e-17 * std::fabs(cur))
            return {cur, std::fabs(cur - prev)};
        prev = cur;
    }
    return {s[0], 0.0};
}

// Length of the strictly sign-alternating suffix of the term list.
std::size_t alternating_suffix(const std::vector<double>& t)
{
    if (t.empty())
        return 0;
    std::size_t len = 1;
    for (std::size_t i = t.size() - 1; i > 0; --i) {
        if (t[i] * t[i - 1] < 0.0)
            ++len;
        else
            break;
    }
    return len;
}

double numeric_second_derivative(const std::function<double(double)>& g, double x, double h)
{
    return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
}

} // namespace

OscillatoryResult oscillatory_sine_integral(const std::function<double(double)>& g,
                                            double r, const QuadratureSpec& spec,
                                            double lambda_start)
{
    spec.validate();
    if (!(r > 0.0))
        throw DomainError("oscillatory_sine_integral: r must be positive");

    const double half = M_PI / r;
    auto integrand = [&](double lam) { return g(lam) * std::sin(lam * r); };

    const double panel_abs = spec.abs_tol / 64.0;

    double head = 0.0, quad_err = 0.0;
    int used = 0;

    // Align on the sine-zero grid.
    long n0 = (long)std::ceil(lambda_start / half - 1e-12);
    if (n0 * half > lambda_start + 1e-300 && n0 > 0) {
        const QuadResult q =
            integrate_adaptive(integrand, lambda_start, n0 * half, panel_abs, 1e-13);
        head += q.value;
        quad_err += q.error_estimate;
        ++used;
    } else if (n0 == 0) {
        // first half-period from 0, possibly with a power-law endpoint
        const QuadResult q = integrate_left_singular(integrand, 0.0, half, panel_abs, 1e-13);
        head += q.value;
        quad_err += q.error_estimate;
        n0 = 1;
        ++used;
    }

    std::vector<double> terms;
    double min_mag = HUGE_VAL;
    int grow_streak = 0;

    auto add_panel = [&]() {
        const double a = (n0 + (long)terms.size()) * half;
        const QuadResult q = integrate_adaptive(integrand, a, a + half, panel_abs, 1e-13);
        terms.push_back(q.value);
        quad_err += q.error_estimate;
        ++used;
        const double mag = std::fabs(q.value);
        if (mag > 2.0 * min_mag && mag > 1e3 * spec.abs_tol)
            ++grow_streak;
        else
            grow_streak = 0;
        min_mag = std::min(min_mag, mag);
        if (grow_streak >= 12)
            throw TailDivergenceError("oscillatory_sine_integral: half-period magnitudes do not decay");
    };

    std::size_t want = 24;
    double best = 0.0, best_err = HUGE_VAL;
    while (true) {
        while (terms.size() < want && used < spec.max_half_periods)
            add_panel();

        double value, accel_err;
        const std::size_t alt = alternating_suffix(terms);
        if (spec.acceleration == Acceleration::alternating_series && alt >= 6) {
            const std::size_t take = std::min<std::size_t>(alt, 48);
            double direct = 0.0;
            for (std::size_t i = 0; i < terms.size() - take; ++i)
                direct += terms[i];
            std::vector<double> tail(terms.end() - take, terms.end());
            auto [tv, te] = euler_accelerate(tail);
            value = direct + tv;
            accel_err = te;
        } else {
            // direct sum + two-term integration-by-parts tail at a zero
            double direct = 0.0;
            for (double t : terms)
                direct += t;
            const double lam_end = (n0 + (long)terms.size()) * half;
            const double cosf = std::cos(lam_end * r); // +-1 at a sine zero
            const double h = 1e-4 * lam_end;
            const double tail = cosf / r * (g(lam_end) - numeric_second_derivative(g, lam_end, h) / (r * r));
            value = direct + tail;
            // bound by the next asymptotic order via the last term size
            accel_err = terms.empty() ? spec.abs_tol : std::fabs(terms.back()) / std::max(1.0, double(terms.size()));
            accel_err = std::min(accel_err, std::fabs(tail));
        }

        const double err = accel_err + quad_err;
        if (err < best_err) {
            best = value;
            best_err = err;
        }
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(head + value));
        if (best_err <= tol)
            return {head + best, best_err, used};
        if (used >= spec.max_half_periods) {
            if (best_err <= 1e3 * tol)
                return {head + best, best_err, used}; // close enough to report
            throw MaxPeriodsError("oscillatory_sine_integral: half-period budget exhausted");
        }
        want = std::min<std::size_t>(want * 2, (std::size_t)spec.max_half_periods);
    }
}

namespace {

// Derivative of the symbol.
double symbol_derivative(const PowerLawSymbol& sym, double lambda)
{
    double d = 0.0;
    for (const auto& t : sym.terms)
        d += t.coefficient * t.exponent * std::pow(lambda, t.exponent - 1.0);
    return d;
}

// Positive real roots of P on a log grid with bisection refinement.
std::vector<double> positive_roots(const PowerLawSymbol& sym)
{
    std::vector<double> roots;
    const int n = 4000;
    const double lo = -9.0, hi = 9.0; // powers of ten
    double prev_lam = std::pow(10.0, lo);
    double prev_val = sym(prev_lam);
    for (int i = 1; i <= n; ++i) {
        const double lam = std::pow(10.0, lo + (hi - lo) * i / n);
        const double val = sym(lam);
        if (prev_val == 0.0)
            roots.push_back(prev_lam);
        else if (prev_val * val < 0.0) {
            double a = prev_lam, b = lam;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                if (sym(a) * sym(m) <= 0.0)
                    b = m;
                else
                    a = m;
                if (b - a < 1e-15 * b)
                    break;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_lam = lam;
        prev_val = val;
    }
    return roots;
}

// Sine transform int_0^inf q(lambda) n(lambda)/P(lambda) sin(lambda r)
// dlambda with optional principal-value excision at simple poles of 1/P.
struct SineTransformResult {
    double value;
    double error_estimate;
    int half_periods_used;
    bool pole_encountered;
};

SineTransformResult pole_aware_sine_transform(const PowerLawSymbol& sym,
                                              const std::function<double(double)>& numerator,
                                              double r, const QuadratureSpec& spec)
{
    const auto roots = positive_roots(sym);
    auto g = [&](double lam) { return numerator(lam) / sym(lam); };

    if (roots.empty()) {
        const OscillatoryResult o = oscillatory_sine_integral(g, r, spec);
        return {o.value, o.error_estimate, o.half_periods_used, false};
    }
    if (spec.pole_policy == PolePolicy::error)
        throw PoleError("symbol has a positive real root at lambda = " +
                        std::to_string(roots.front()) + "; set pole_policy=principal_value");
    if (roots.size() > 1)
        throw PoleError("multiple positive real roots; principal value supported for one pole only");

    const double lam_star = roots.front();
    const double residue = numerator(lam_star) / symbol_derivative(sym, lam_star);
    const double h = std::min(0.5 * lam_star, 0.5 * M_PI / r);

    double value = 0.0, err = 0.0;
    int used = 0;

    // [0, lam* - h]: finite stretch, panelized at the sine zeros.
    {
        const double b = lam_star - h;
        auto integrand = [&](double lam) { return g(lam) * std::sin(lam * r); };
        const double half = M_PI / r;
        double a = 0.0;
        long k = 1;
        while (a < b) {
            const double hi2 = std::min(k * half, b);
            const QuadResult q = (k == 1)
                ? integrate_left_singular(integrand, a, hi2, spec.abs_tol / 64.0, 1e-13)
                : integrate_adaptive(integrand, a, hi2, spec.abs_tol / 64.0, 1e-13);
            value += q.value;
            err += q.error_estimate;
            ++used;
            a = hi2;
            ++k;
        }
    }

    // Symmetric excision: subtract the simple-pole model, add it back
    // analytically (its PV over [-h, h] is 2 cos(lam* r) Si(h r)).
    {
        auto regular = [&](double lam) {
            return (g(lam) - residue / (lam - lam_star)) * std::sin(lam * r);
        };
        const QuadResult q = integrate_adaptive(regular, lam_star - h, lam_star + h,
                                                spec.abs_tol / 64.0, 1e-13);
        value += q.value + residue * 2.0 * std::cos(lam_star * r) * sine_integral(h * r);
        err += q.error_estimate;
    }

    // (lam* + h, inf): regular oscillatory tail.
    {
        QuadratureSpec tail_spec = spec;
        tail_spec.max_half_periods = std::max(8, spec.max_half_periods - used);
        const OscillatoryResult o = oscillatory_sine_integral(g, r, tail_spec, lam_star + h);
        value += o.value;
        err += o.error_estimate;
        used += o.half_periods_used;
    }

    return {value, err, used, true};
}

} // namespace

PotentialResult correction_factor(const PowerLawSymbol& sym, double r,
                                  const QuadratureSpec& spec)
{
    sym.validate();
    spec.validate();
    if (!(r > 0.0))
        throw DomainError("correction_factor: r must be positive");

    const SineTransformResult st =
        pole_aware_sine_transform(sym, [](double lam) { return lam; }, r, spec);

    PotentialResult res;
    res.correction_factor = 2.0 / M_PI * st.value;
    res.value = res.correction_factor;
    res.error_estimate = 2.0 / M_PI * st.error_estimate;
    res.half_periods_used = st.half_periods_used;
    res.pole_encountered = st.pole_encountered;
    return res;
}

double green_function_radial(const PowerLawSymbol& sym, double r,
                             const QuadratureSpec& spec)
{
    sym.validate();
    spec.validate();
    if (!(r > 0.0))
        throw DomainError("green_function_radial: r must be positive");
    if (!(sym.largest_exponent() > 1.0))
        throw SolvabilityError("green_function_radial: largest exponent must exceed 1");
    if (sym.constant == 0.0 && !(sym.smallest_exponent() < 3.0))
        throw SolvabilityError("green_function_radial: smallest exponent must be below 3 when a0 = 0");

    // J_1/2 prefactor of the radial reduction; the sine factor itself is
    // supplied by the engine.
    auto numerator = [r](double lam) {
        return std::pow(lam, 1.5) * std::sqrt(2.0 / (M_PI * lam * r));
    };
    const SineTransformResult st = pole_aware_sine_transform(sym, numerator, r, spec);
    return std::pow(r, -0.5) / std::pow(2.0 * M_PI, 1.5) * st.value;
}

PotentialResult point_charge_potential(const DispersionCase& c, double Q, double r,
                                       const QuadratureSpec& spec)
{
    if (!(r > 0.0))
        throw DomainError("point_charge_potential: r must be positive");
    c.plasma.validate();
    const double eps0 = c.plasma.vacuum_permittivity;
    const double coulomb = Q / (4.0 * M_PI * eps0 * r);

    PotentialResult res;
    switch (c.tag) {
    case CaseTag::coulomb:
        res.correction_factor = 1.0;
        break;
    case CaseTag::debye:
        res.correction_factor = std::exp(-r / debye_radius(c.plasma));
        break;
    default:
        res = correction_factor(build_symbol(c), r, spec);
        break;
    }
    res.value = coulomb * res.correction_factor;
    res.error_estimate *= std::fabs(coulomb);
    return res;
}

std::vector<PotentialResult> potential_profile(const DispersionCase& c, double Q,
                                               const std::vector<double>& r_grid,
                                               const QuadratureSpec& spec)
{
    for (std::size_t i = 1; i < r_grid.size(); ++i)
        if (!(r_grid[i] > r_grid[i - 1]))
            throw DomainError("potential_profile: r_grid must be strictly increasing");

    std::vector<PotentialResult> out;
    out.reserve(r_grid.size());
    for (double r : r_grid) {
        try {
            out.push_back(point_charge_potential(c, Q, r, spec));
        } catch (const Error& e) {
            PotentialResult bad;
            bad.error = e.what();
            out.push_back(bad);
        }
    }
    return out;
}

} // namespace fracplasma
