// Command-line front end: permittivity / potential sweeps to CSV and the
// validation suite.
//
// Exit codes: 0 success, 1 validation-suite failure, 2 config error,
//             3 numerical error.

#include "fracplasma/errors.hpp"
#include "fracplasma/plasma.hpp"
#include "fracplasma/potential.hpp"
#include "fracplasma/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
namespace fp = fracplasma;

namespace {

constexpr const char* kVersion = "0.1.0";

enum class GridSpacing { linear, log };

struct RunConfig {
    fp::PlasmaParameters plasma{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    double alpha = 1.0;
    double omega = 0.0;
    std::string case_tag = "debye";
    double grid_min = 0.1;
    double grid_max = 10.0;
    int grid_count = 50;
    GridSpacing spacing = GridSpacing::log;
    fp::QuadratureSpec quadrature;
    double point_charge = 1.0;
    std::string out_path;
};

GridSpacing parse_spacing(const std::string& s)
{
    if (s == "linear")
        return GridSpacing::linear;
    if (s == "log")
        return GridSpacing::log;
    throw fp::DomainError("grid spacing must be 'linear' or 'log'");
}

fp::PolePolicy parse_pole_policy(const std::string& s)
{
    if (s == "error")
        return fp::PolePolicy::error;
    if (s == "principal_value")
        return fp::PolePolicy::principal_value;
    throw fp::DomainError("pole policy must be 'error' or 'principal_value'");
}

fp::Acceleration parse_acceleration(const std::string& s)
{
    if (s == "none")
        return fp::Acceleration::none;
    if (s == "alternating-series")
        return fp::Acceleration::alternating_series;
    throw fp::DomainError("acceleration must be 'none' or 'alternating-series'");
}

json config_to_json(const RunConfig& cfg)
{
    return json{
        {"plasma",
         {{"number_density", cfg.plasma.number_density},
          {"charge", cfg.plasma.charge},
          {"mass", cfg.plasma.mass},
          {"temperature", cfg.plasma.temperature},
          {"vacuum_permittivity", cfg.plasma.vacuum_permittivity},
          {"boltzmann", cfg.plasma.boltzmann}}},
        {"alpha", cfg.alpha},
        {"omega", cfg.omega},
        {"case", cfg.case_tag},
        {"grid",
         {{"min", cfg.grid_min},
          {"max", cfg.grid_max},
          {"count", cfg.grid_count},
          {"spacing", cfg.spacing == GridSpacing::log ? "log" : "linear"}}},
        {"quadrature",
         {{"abs_tol", cfg.quadrature.abs_tol},
          {"rel_tol", cfg.quadrature.rel_tol},
          {"max_half_periods", cfg.quadrature.max_half_periods},
          {"acceleration",
           cfg.quadrature.acceleration == fp::Acceleration::none ? "none"
                                                                 : "alternating-series"},
          {"pole_policy",
           cfg.quadrature.pole_policy == fp::PolePolicy::error ? "error"
                                                               : "principal_value"}}},
        {"point_charge", cfg.point_charge}};
}

void config_from_json(RunConfig& cfg, const json& j)
{
    if (j.contains("plasma")) {
        const auto& p = j.at("plasma");
        if (p.contains("number_density")) cfg.plasma.number_density = p.at("number_density");
        if (p.contains("charge")) cfg.plasma.charge = p.at("charge");
        if (p.contains("mass")) cfg.plasma.mass = p.at("mass");
        if (p.contains("temperature")) cfg.plasma.temperature = p.at("temperature");
        if (p.contains("vacuum_permittivity")) cfg.plasma.vacuum_permittivity = p.at("vacuum_permittivity");
        if (p.contains("boltzmann")) cfg.plasma.boltzmann = p.at("boltzmann");
    }
    if (j.contains("alpha")) cfg.alpha = j.at("alpha");
    if (j.contains("omega")) cfg.omega = j.at("omega");
    if (j.contains("case")) cfg.case_tag = j.at("case");
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (g.contains("min")) cfg.grid_min = g.at("min");
        if (g.contains("max")) cfg.grid_max = g.at("max");
        if (g.contains("count")) cfg.grid_count = g.at("count");
        if (g.contains("spacing")) cfg.spacing = parse_spacing(g.at("spacing"));
    }
    if (j.contains("quadrature")) {
        const auto& q = j.at("quadrature");
        if (q.contains("abs_tol")) cfg.quadrature.abs_tol = q.at("abs_tol");
        if (q.contains("rel_tol")) cfg.quadrature.rel_tol = q.at("rel_tol");
        if (q.contains("max_half_periods")) cfg.quadrature.max_half_periods = q.at("max_half_periods");
        if (q.contains("acceleration")) cfg.quadrature.acceleration = parse_acceleration(q.at("acceleration"));
        if (q.contains("pole_policy")) cfg.quadrature.pole_policy = parse_pole_policy(q.at("pole_policy"));
    }
    if (j.contains("point_charge")) cfg.point_charge = j.at("point_charge");
    if (j.contains("out")) cfg.out_path = j.at("out");
}

void validate_config(const RunConfig& cfg)
{
    cfg.plasma.validate();
    cfg.quadrature.validate();
    if (cfg.grid_count < 1)
        throw fp::DomainError("grid count must be >= 1");
    if (cfg.grid_count > 1 && !(cfg.grid_min < cfg.grid_max))
        throw fp::DomainError("grid min must be below grid max");
    if (cfg.spacing == GridSpacing::log && !(cfg.grid_min > 0.0))
        throw fp::DomainError("log grid requires positive min");
    if (!(cfg.grid_min > 0.0))
        throw fp::DomainError("grid values must be positive");
}

std::vector<double> make_grid(const RunConfig& cfg)
{
    std::vector<double> g(cfg.grid_count);
    if (cfg.grid_count == 1) {
        g[0] = cfg.grid_min;
        return g;
    }
    for (int i = 0; i < cfg.grid_count; ++i) {
        const double t = double(i) / (cfg.grid_count - 1);
        g[i] = cfg.spacing == GridSpacing::log
                   ? cfg.grid_min * std::pow(cfg.grid_max / cfg.grid_min, t)
                   : cfg.grid_min + t * (cfg.grid_max - cfg.grid_min);
    }
    return g;
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_header(std::ostream& os, const RunConfig& cfg, const std::string& command)
{
    os << "# fracplasma " << kVersion << "\n";
    os << "# command: " << command << "\n";
    os << "# config: " << config_to_json(cfg).dump() << "\n";
}

int run_permittivity(const RunConfig& cfg)
{
    validate_config(cfg);

    std::ostringstream body;
    write_header(body, cfg, "permittivity");
    body << "k,x,eps_re_exact,eps_im_exact,eps_small_x,eps_large_x\n";

    for (double k : make_grid(cfg)) {
        const fp::SpectralPoint sp{k, cfg.omega, {cfg.alpha}};
        double x, re, im;
        try {
            const fp::ComplexPermittivity e = fp::permittivity_exact(sp, cfg.plasma);
            x = e.x_used;
            re = e.value.real();
            im = e.value.imag();
        } catch (const fp::Error& e) {
            std::cerr << "numerical failure at k = " << fmt(k) << ": " << e.what() << "\n";
            return 3;
        }
        std::string small, large;
        if (x < 1.0)
            small = fmt(fp::permittivity_small_x(sp, cfg.plasma, 3).value.real());
        if (x > 1.0)
            large = fmt(fp::permittivity_large_x(sp, cfg.plasma, 2).value.real());
        body << fmt(k) << ',' << fmt(x) << ',' << fmt(re) << ',' << fmt(im) << ','
             << small << ',' << large << "\n";
    }

    if (cfg.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out_path);
        if (!f)
            throw fp::DomainError("cannot open output path " + cfg.out_path);
        f << body.str();
    }
    return 0;
}

int run_potential(const RunConfig& cfg)
{
    validate_config(cfg);
    const fp::DispersionCase dcase{fp::parse_case_tag(cfg.case_tag),
                                   {cfg.alpha},
                                   cfg.omega,
                                   cfg.plasma};
    // Surface case-invariant violations as config errors before output.
    fp::build_symbol(dcase);

    const auto results =
        fp::potential_profile(dcase, cfg.point_charge, make_grid(cfg), cfg.quadrature);

    std::ostringstream body;
    write_header(body, cfg, "potential");
    body << "r,phi,correction_factor,error_estimate,half_periods_used,pole_flag,error\n";

    bool any_failed = false;
    const auto grid = make_grid(cfg);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& pr = results[i];
        if (pr.error) {
            any_failed = true;
            body << fmt(grid[i]) << ",,,,,," << *pr.error << "\n";
            std::cerr << "numerical failure at r = " << fmt(grid[i]) << ": "
                      << *pr.error << "\n";
        } else {
            body << fmt(grid[i]) << ',' << fmt(pr.value) << ','
                 << fmt(pr.correction_factor) << ',' << fmt(pr.error_estimate) << ','
                 << pr.half_periods_used << ',' << (pr.pole_encountered ? 1 : 0)
                 << ",\n";
        }
    }

    if (cfg.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out_path);
        if (!f)
            throw fp::DomainError("cannot open output path " + cfg.out_path);
        f << body.str();
    }
    return any_failed ? 3 : 0;
}

int run_validate(double dawson_shift)
{
    fp::ValidationOptions opts;
    opts.dawson_shift = dawson_shift;
    const fp::ValidationReport rep = fp::run_validation_suite(opts);
    fp::print_report(rep, std::cout);
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"longitudinal permittivity and screened potentials of "
                 "plasma-like media with power-law spatial dispersion"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, spacing_str, pole_policy_str, accel_str;
    double dawson_shift = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; flags override it");
        sub->add_option("--out", cfg.out_path, "output CSV path (default: stdout)");
        sub->add_option("--alpha", cfg.alpha, "fractional order");
        sub->add_option("--omega", cfg.omega, "angular frequency");
        sub->add_option("--case", cfg.case_tag, "dispersion case tag");
        sub->add_option("--grid-min", cfg.grid_min);
        sub->add_option("--grid-max", cfg.grid_max);
        sub->add_option("--grid-count", cfg.grid_count);
        sub->add_option("--grid-spacing", spacing_str, "linear|log");
        sub->add_option("--abs-tol", cfg.quadrature.abs_tol);
        sub->add_option("--rel-tol", cfg.quadrature.rel_tol);
        sub->add_option("--pole-policy", pole_policy_str, "error|principal_value");
        sub->add_option("--acceleration", accel_str, "none|alternating-series");
        sub->add_option("--max-half-periods", cfg.quadrature.max_half_periods);
        sub->add_option("--density", cfg.plasma.number_density);
        sub->add_option("--charge", cfg.plasma.charge);
        sub->add_option("--mass", cfg.plasma.mass);
        sub->add_option("--temperature", cfg.plasma.temperature);
        sub->add_option("--vacuum-permittivity", cfg.plasma.vacuum_permittivity);
        sub->add_option("--boltzmann", cfg.plasma.boltzmann);
        sub->add_option("--point-charge", cfg.point_charge, "point charge Q");
    };

    CLI::App* perm = app.add_subcommand("permittivity", "sweep eps(|k|) over a k grid");
    add_common(perm);
    CLI::App* pot = app.add_subcommand("potential", "sweep Phi(r) over an r grid");
    add_common(pot);
    CLI::App* val = app.add_subcommand("validate", "run the full invariant suite");
    val->add_option("--inject-dawson-shift", dawson_shift)->group(""); // test-only

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (sub == val)
            return run_validate(dawson_shift);

        // Config file first, then re-apply flags on top.
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                std::cerr << "config error: cannot read " << config_path << "\n";
                return 2;
            }
            RunConfig from_file;
            config_from_json(from_file, json::parse(f));
            // Flags already landed in cfg; pull file values for options
            // the user did not pass.
            RunConfig merged = from_file;
            auto passed = [&](const std::string& name) { return sub->count(name) > 0; };
            if (passed("--out")) merged.out_path = cfg.out_path;
            if (passed("--alpha")) merged.alpha = cfg.alpha;
            if (passed("--omega")) merged.omega = cfg.omega;
            if (passed("--case")) merged.case_tag = cfg.case_tag;
            if (passed("--grid-min")) merged.grid_min = cfg.grid_min;
            if (passed("--grid-max")) merged.grid_max = cfg.grid_max;
            if (passed("--grid-count")) merged.grid_count = cfg.grid_count;
            if (passed("--abs-tol")) merged.quadrature.abs_tol = cfg.quadrature.abs_tol;
            if (passed("--rel-tol")) merged.quadrature.rel_tol = cfg.quadrature.rel_tol;
            if (passed("--max-half-periods")) merged.quadrature.max_half_periods = cfg.quadrature.max_half_periods;
            if (passed("--density")) merged.plasma.number_density = cfg.plasma.number_density;
            if (passed("--charge")) merged.plasma.charge = cfg.plasma.charge;
            if (passed("--mass")) merged.plasma.mass = cfg.plasma.mass;
            if (passed("--temperature")) merged.plasma.temperature = cfg.plasma.temperature;
            if (passed("--vacuum-permittivity")) merged.plasma.vacuum_permittivity = cfg.plasma.vacuum_permittivity;
            if (passed("--boltzmann")) merged.plasma.boltzmann = cfg.plasma.boltzmann;
            if (passed("--point-charge")) merged.point_charge = cfg.point_charge;
            cfg = merged;
        }
        if (!spacing_str.empty())
            cfg.spacing = parse_spacing(spacing_str);
        if (!pole_policy_str.empty())
            cfg.quadrature.pole_policy = parse_pole_policy(pole_policy_str);
        if (!accel_str.empty())
            cfg.quadrature.acceleration = parse_acceleration(accel_str);

        if (sub == perm)
            return run_permittivity(cfg);
        return run_potential(cfg);
    } catch (const fp::DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fp::CaseInvariantError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fp::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
