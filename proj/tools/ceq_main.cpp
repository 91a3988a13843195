// ceq — command line front end for the Coulomb equilibrium library.
// Links only the C API (ceq/capi.h).

#include "ceq/capi.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitUsage = 64;

// All numeric output carries 17 significant digits so runs are diffable and
// re-parse bit-identically.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

[[noreturn]] void die_status(ceq_status s) {
    const std::string msg = std::string(ceq_status_name(s)) + ": " + ceq_last_error();
    switch (s) {
    case CEQ_ERR_NOT_ADMISSIBLE:
    case CEQ_ERR_NOT_CONFINING:
    case CEQ_ERR_INVALID_ARGUMENT:
    case CEQ_ERR_DOMAIN:
        die(kExitInvalidConfig, msg);
    default:
        die(kExitInternal, msg);
    }
}

void check(ceq_status s) {
    if (s != CEQ_OK)
        die_status(s);
}

struct ConfigFlags {
    int d = 0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double h1 = 1.0;
    double h2 = 0.0;
    std::string config_path;
    double tol = 1e-12;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
    cmd->add_option("--d", f.d, "dimension of the conductor R^d (>= 2)");
    cmd->add_option("--gamma1", f.gamma1, "repellent charge strength (default 0)");
    cmd->add_option("--gamma2", f.gamma2, "attractor charge strength");
    cmd->add_option("--h1", f.h1, "height of the repellent charge (default 1)");
    cmd->add_option("--h2", f.h2, "height of the attractor charge");
    cmd->add_option("--config", f.config_path, "JSON file with a charge configuration");
    cmd->add_option("--tol", f.tol, "tolerance for the weakly admissible band");
}

// RAII for the C handles.
struct Config {
    ceq_config* p = nullptr;
    ~Config() { ceq_config_free(p); }
};
struct Measure {
    ceq_measure* p = nullptr;
    ~Measure() { ceq_measure_free(p); }
};

void make_config(const ConfigFlags& f, Config& out) {
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in)
            die(kExitInvalidConfig, "cannot read config file: " + f.config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        check(ceq_config_from_json(ss.str().c_str(), &out.p));
        return;
    }
    if (f.d == 0 || f.gamma2 == 0.0 || f.h2 == 0.0)
        die(kExitUsage, "--d, --gamma2 and --h2 are required (or pass --config)");
    check(ceq_config_create(f.d, f.gamma1, f.gamma2, f.h1, f.h2, &out.p));
}

std::string config_json(const Config& cfg) {
    int d;
    double g1, g2, h1, h2;
    check(ceq_config_get(cfg.p, &d, &g1, &g2, &h1, &h2));
    std::string s = "{\"d\":" + std::to_string(d);
    s += ",\"gamma1\":" + fmt(g1);
    s += ",\"gamma2\":" + fmt(g2);
    s += ",\"h1\":" + fmt(h1);
    s += ",\"h2\":" + fmt(h2) + "}";
    return s;
}

const char* case_name(ceq_case_tag t) {
    switch (t) {
    case CEQ_CASE_A1: return "A1";
    case CEQ_CASE_A2: return "A2";
    case CEQ_CASE_B: return "B";
    case CEQ_CASE_C: return "C";
    }
    return "?";
}

const char* admissibility_name(ceq_admissibility a) {
    switch (a) {
    case CEQ_ADMISSIBLE: return "admissible";
    case CEQ_WEAKLY_ADMISSIBLE: return "weakly_admissible";
    case CEQ_NOT_ADMISSIBLE: return "not_admissible";
    }
    return "?";
}

const char* support_name(ceq_support_type t) {
    switch (t) {
    case CEQ_SUPPORT_BALL: return "ball";
    case CEQ_SUPPORT_SHELL: return "shell";
    case CEQ_SUPPORT_WHOLE_SPACE: return "whole_space";
    case CEQ_SUPPORT_COMPLEMENT_OF_BALL: return "complement_of_ball";
    }
    return "?";
}

std::string regime_json_fields(const ceq_regime_info& reg) {
    std::string s;
    s += "\"case\":\"" + std::string(case_name(reg.case_tag)) + "\"";
    s += ",\"admissibility\":\"" + std::string(admissibility_name(reg.admissibility)) + "\"";
    s += ",\"support\":{\"type\":\"" + std::string(support_name(reg.support_type)) + "\"";
    s += ",\"inner\":" + fmt(reg.inner);
    s += ",\"outer\":" + (reg.outer_finite ? fmt(reg.outer) : std::string("\"inf\"")) + "}";
    s += ",\"inner\":" + fmt(reg.inner);
    s += ",\"outer\":" + (reg.outer_finite ? fmt(reg.outer) : std::string("\"inf\""));
    s += ",\"r_c\":" + (reg.has_r_c ? fmt(reg.r_c) : std::string("null"));
    return s;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        die(kExitInternal, "cannot write output file: " + out_path);
    out << text;
    if (!out)
        die(kExitInternal, "short write to: " + out_path);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? hi : lo + (hi - lo) * i / (n - 1.0);
    return v;
}

int run_classify(const ConfigFlags& f, const std::string& out_path) {
    Config cfg;
    make_config(f, cfg);
    ceq_regime_info reg;
    check(ceq_classify(cfg.p, f.tol, &reg));
    std::string s = "{\"command\":\"classify\",\"config\":" + config_json(cfg) + ",";
    s += regime_json_fields(reg);
    s += "}\n";
    emit(out_path, s);
    return kExitOk;
}

int run_solve(const ConfigFlags& f, const std::string& out_path) {
    Config cfg;
    make_config(f, cfg);
    Measure m;
    check(ceq_measure_create(cfg.p, &m.p));
    ceq_regime_info reg;
    check(ceq_measure_regime(m.p, &reg));

    double mass_outer, qmass, dens_inner, gs_res = 0.0;
    const double outer = reg.outer_finite ? reg.outer : INFINITY;
    check(ceq_measure_mass(m.p, outer, &mass_outer));
    check(ceq_measure_quadrature_mass(m.p, &qmass));
    check(ceq_measure_density(m.p, reg.inner, &dens_inner));
    if (reg.outer_finite)
        check(ceq_g_s(cfg.p, reg.outer, &gs_res));

    std::string s = "{\"command\":\"solve\",\"config\":" + config_json(cfg) + ",";
    s += regime_json_fields(reg);
    s += ",\"mass_at_outer\":" + fmt(mass_outer);
    s += ",\"quadrature_mass\":" + fmt(qmass);
    s += ",\"density_at_inner\":" + fmt(dens_inner);
    if (reg.outer_finite) {
        double dens_outer;
        check(ceq_measure_density(m.p, reg.outer, &dens_outer));
        s += ",\"density_at_outer\":" + fmt(dens_outer);
        s += ",\"g_s_residual\":" + fmt(gs_res);
    }
    s += "}\n";
    emit(out_path, s);
    return kExitOk;
}

int run_verify(const ConfigFlags& f, double tol_eq, const std::string& out_path) {
    Config cfg;
    make_config(f, cfg);
    Measure m;
    check(ceq_measure_create(cfg.p, &m.p));
    ceq_frostman_report rep;
    check(ceq_frostman_check(m.p, tol_eq, &rep));

    std::string s = "{\"command\":\"verify\",\"config\":" + config_json(cfg) + ",";
    s += "\"F_Q\":" + fmt(rep.f_q);
    s += ",\"max_dev_on_support\":" + fmt(rep.max_dev_on_support);
    s += ",\"min_margin_off_support\":" +
         (rep.has_off_support ? fmt(rep.min_margin_off_support) : std::string("null"));
    s += ",\"tol_eq\":" + fmt(tol_eq);
    s += std::string(",\"passed\":") + (rep.passed ? "true" : "false");
    s += "}\n";
    emit(out_path, s);
    return rep.passed ? kExitOk : kExitVerifyFailed;
}

int run_sample(const ConfigFlags& f, int n, std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
    Config cfg;
    make_config(f, cfg);
    Measure m;
    check(ceq_measure_create(cfg.p, &m.p));
    int d;
    check(ceq_config_get(cfg.p, &d, nullptr, nullptr, nullptr, nullptr));
    std::vector<double> pts(static_cast<std::size_t>(n) * d);
    check(ceq_measure_sample(m.p, n, seed, pts.data()));

    std::string s;
    if (format == "json") {
        s += "{\"command\":\"sample\",\"config\":" + config_json(cfg) + ",\"points\":[";
        for (int i = 0; i < n; ++i) {
            s += i ? ",[" : "[";
            for (int k = 0; k < d; ++k)
                s += (k ? "," : "") + fmt(pts[static_cast<std::size_t>(i) * d + k]);
            s += "]";
        }
        s += "]}\n";
    } else {
        for (int k = 0; k < d; ++k)
            s += (k ? ",x" : "x") + std::to_string(k + 1);
        s += "\n";
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < d; ++k)
                s += (k ? "," : "") + fmt(pts[static_cast<std::size_t>(i) * d + k]);
            s += "\n";
        }
    }
    emit(out_path, s);
    return kExitOk;
}

int run_simulate(const ConfigFlags& f, const ceq_oracle_opts& opts, const std::string& out_path) {
    Config cfg;
    make_config(f, cfg);
    ceq_oracle_result res;
    check(ceq_oracle_minimize(cfg.p, &opts, &res, nullptr, nullptr));

    std::string s = "{\"command\":\"simulate\",\"config\":" + config_json(cfg) + ",";
    s += "\"n\":" + std::to_string(opts.n);
    s += ",\"seed\":" + std::to_string(opts.seed);
    s += ",\"final_energy\":" + fmt(res.final_energy);
    s += ",\"ks_distance\":" + fmt(res.ks_distance);
    s += ",\"min_radius\":" + fmt(res.min_radius);
    s += ",\"max_radius\":" + fmt(res.max_radius);
    s += ",\"frostman_residual\":" + fmt(res.frostman_residual);
    s += ",\"iterations\":" + std::to_string(res.iterations);
    s += std::string(",\"converged\":") + (res.converged ? "true" : "false");
    s += "}\n";
    emit(out_path, s);
    return kExitOk;
}

int run_profile(const ConfigFlags& f, double rmin, double rmax, int n,
                const std::string& format, const std::string& out_path) {
    Config cfg;
    make_config(f, cfg);
    Measure m;
    check(ceq_measure_create(cfg.p, &m.p));
    ceq_regime_info reg;
    check(ceq_measure_regime(m.p, &reg));

    if (rmax <= 0.0) {
        double h2;
        check(ceq_config_get(cfg.p, nullptr, nullptr, nullptr, nullptr, &h2));
        rmax = reg.outer_finite ? 1.5 * reg.outer : 10.0 * std::max(h2, reg.inner);
    }
    if (!(rmin >= 0.0) || !(rmax > rmin))
        die(kExitUsage, "need 0 <= --rmin < --rmax");

    std::string s;
    const bool json = format == "json";
    if (json)
        s += "{\"command\":\"profile\",\"config\":" + config_json(cfg) + ",\"rows\":[";
    else
        s += "r,density,mass,Q,U_plus_Q\n";
    const auto rs = linspace(rmin, rmax, n);
    for (int i = 0; i < n; ++i) {
        const double r = rs[i];
        double dens, mass, q, u;
        check(ceq_measure_density(m.p, r, &dens));
        check(ceq_measure_mass(m.p, r, &mass));
        check(ceq_field_q(cfg.p, r, &q));
        check(ceq_measure_potential(m.p, r, &u));
        if (json) {
            s += i ? ",{" : "{";
            s += "\"r\":" + fmt(r) + ",\"density\":" + fmt(dens) + ",\"mass\":" + fmt(mass) +
                 ",\"Q\":" + fmt(q) + ",\"U_plus_Q\":" + fmt(u + q) + "}";
        } else {
            s += fmt(r) + "," + fmt(dens) + "," + fmt(mass) + "," + fmt(q) + "," + fmt(u + q) +
                 "\n";
        }
    }
    if (json)
        s += "]}\n";
    emit(out_path, s);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Coulomb equilibrium measures for an attractive-repellent "
                 "pair of charges above R^d"};
    app.require_subcommand(1);

    ConfigFlags flags;
    std::string out_path;
    std::string format = "json";

    auto* classify = app.add_subcommand("classify", "classify the support regime");
    auto* solve = app.add_subcommand("solve", "solve radii and mass diagnostics");
    auto* verify = app.add_subcommand("verify", "check the Frostman conditions");
    auto* sample = app.add_subcommand("sample", "draw i.i.d. samples from mu_Q");
    auto* simulate = app.add_subcommand("simulate", "run the particle-energy oracle");
    auto* profile = app.add_subcommand("profile", "export r,density,mass,Q,U_plus_Q");

    double tol_eq = 1e-6;
    int sample_n = 1000;
    std::uint64_t sample_seed = 1;
    double rmin = 0.0, rmax = -1.0;
    int profile_n = 200;
    ceq_oracle_opts opts;
    ceq_oracle_opts_default(&opts);

    for (CLI::App* cmd : {classify, solve, verify, sample, simulate, profile}) {
        add_config_flags(cmd, flags);
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        cmd->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    }
    verify->add_option("--tol-eq", tol_eq, "Frostman constancy tolerance");
    sample->add_option("--n", sample_n, "number of samples");
    sample->add_option("--seed", sample_seed, "random seed");
    simulate->add_option("--n", opts.n, "number of particles");
    simulate->add_option("--seed", opts.seed, "random seed");
    simulate->add_option("--gtol", opts.gtol, "gradient stopping tolerance");
    simulate->add_option("--max-iters", opts.max_iters, "iteration cap");
    profile->add_option("--rmin", rmin, "grid start radius");
    profile->add_option("--rmax", rmax, "grid end radius");
    profile->add_option("--n", profile_n, "number of grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    }

    // sample and profile default to CSV
    if ((sample->parsed() && sample->count("--format") == 0) ||
        (profile->parsed() && profile->count("--format") == 0))
        format = "csv";

    try {
        if (classify->parsed())
            return run_classify(flags, out_path);
        if (solve->parsed())
            return run_solve(flags, out_path);
        if (verify->parsed())
            return run_verify(flags, tol_eq, out_path);
        if (sample->parsed())
            return run_sample(flags, sample_n, sample_seed, format, out_path);
        if (simulate->parsed())
            return run_simulate(flags, opts, out_path);
        if (profile->parsed())
            return run_profile(flags, rmin, rmax, profile_n, format, out_path);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
