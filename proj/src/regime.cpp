#include "ceq/regime.hpp"

#include "ceq/rootfind.hpp"

#include <cmath>
#include <limits>

namespace ceq {

namespace {

// R^d / (R^2 + h^2)^{d/2}, computed as (1 + (h/R)^2)^{-d/2}; 0 at R = 0,
// 1 at R = +inf. Monotone increasing in R, bounded, overflow-free.
double radial_fraction(int d, double h, double R) {
    if (R == 0.0)
        return 0.0;
    if (std::isinf(R))
        return 1.0;
    const double q = h / R;
    return std::pow(1.0 + q * q, -0.5 * d);
}

void check(bool ok, const char* what) {
    if (!ok)
        throw error(std::string("internal consistency violated: ") + what);
}

} // namespace

const char* to_string(CaseTag c) {
    switch (c) {
    case CaseTag::A1: return "A1";
    case CaseTag::A2: return "A2";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    }
    return "?";
}

const char* to_string(SupportType t) {
    switch (t) {
    case SupportType::Ball: return "ball";
    case SupportType::Shell: return "shell";
    case SupportType::WholeSpace: return "whole_space";
    case SupportType::ComplementOfBall: return "complement_of_ball";
    }
    return "?";
}

nlohmann::json Regime::to_json() const {
    nlohmann::json j{{"case", to_string(case_tag)},
                     {"admissibility", to_string(admissibility)},
                     {"inner", support.inner}};
    if (support.outer)
        j["outer"] = *support.outer;
    else
        j["outer"] = "inf";
    if (r_c)
        j["r_c"] = *r_c;
    else
        j["r_c"] = nullptr;
    j["support"] = {{"type", to_string(support.type())}, {"inner", support.inner}};
    if (support.outer)
        j["support"]["outer"] = *support.outer;
    else
        j["support"]["outer"] = "inf";
    return j;
}

double g_c(const ChargeConfig& cfg, double r) {
    const double e = -0.5 * cfg.dim.d - 1.0;
    const double s1 = r * r + cfg.h1 * cfg.h1;
    const double s2 = r * r + cfg.h2 * cfg.h2;
    return cfg.gamma2 * cfg.h2 * cfg.h2 * std::pow(s2, e) -
           cfg.gamma1 * cfg.h1 * cfg.h1 * std::pow(s1, e);
}

double g_s(const ChargeConfig& cfg, double R) {
    return 1.0 - mass_primitive(cfg, R);
}

double mass_primitive(const ChargeConfig& cfg, double r) {
    return cfg.gamma2 * radial_fraction(cfg.dim.d, cfg.h2, r) -
           cfg.gamma1 * radial_fraction(cfg.dim.d, cfg.h1, r);
}

CaseTag case_tag_of(const ChargeConfig& cfg) {
    if (cfg.h1 == cfg.h2)
        return CaseTag::A2; // single effective charge
    if (cfg.h2 < cfg.h1) {
        if (cfg.gamma1 == 0.0)
            return CaseTag::A2;
        const double hr = cfg.h1 / cfg.h2;
        return cfg.gamma2 / cfg.gamma1 < hr * hr ? CaseTag::A1 : CaseTag::A2;
    }
    if (cfg.gamma1 == 0.0)
        return CaseTag::C;
    return cfg.gamma2 / cfg.gamma1 < std::pow(cfg.h2 / cfg.h1, cfg.dim.d) ? CaseTag::B
                                                                          : CaseTag::C;
}

std::optional<double> solve_outer_radius(const ChargeConfig& cfg, double tol) {
    const Admissibility adm = classify_admissibility(cfg, tol);
    if (adm == Admissibility::NotAdmissible)
        throw not_admissible_error("no equilibrium measure exists: gamma2 - gamma1 < 1");
    if (adm == Admissibility::WeaklyAdmissible) {
        // g_s has a positive zero only when gamma2/gamma1 < (h1/h2)^2
        // (Theorem 2 i); otherwise the support is unbounded.
        if (cfg.gamma1 == 0.0 || !(cfg.gamma2 * cfg.h2 * cfg.h2 < cfg.gamma1 * cfg.h1 * cfg.h1))
            return std::nullopt;
    }
    auto f = [&cfg](double R) { return g_s(cfg, R); };
    // g_s(0) = 1 > 0 and g_s < 0 past the unique root, so geometric expansion
    // from any positive seed is safe.
    auto [lo, hi] = bracket_root(f, std::max(cfg.h2, 1.0));
    return refine_root(f, lo, hi);
}

double solve_inner_radius(const ChargeConfig& cfg, double tol) {
    if (classify_admissibility(cfg, tol) == Admissibility::NotAdmissible)
        throw not_admissible_error("no equilibrium measure exists: gamma2 - gamma1 < 1");
    if (case_tag_of(cfg) != CaseTag::B)
        throw regime_error("no inner radius in this regime");
    const double beta = std::pow(cfg.gamma1 / cfg.gamma2, 2.0 / cfg.dim.d);
    const double r2 = (beta * cfg.h2 * cfg.h2 - cfg.h1 * cfg.h1) / (1.0 - beta);
    check(r2 > 0.0, "R0^2 must be positive in case B");
    return std::sqrt(r2);
}

std::optional<double> solve_density_zero(const ChargeConfig& cfg) {
    if (cfg.gamma1 == 0.0)
        return std::nullopt;
    const double alpha = std::pow(cfg.gamma2 * cfg.h2 * cfg.h2 / (cfg.gamma1 * cfg.h1 * cfg.h1),
                                  2.0 / (cfg.dim.d + 2.0));
    if (alpha == 1.0)
        return std::nullopt;
    const double r2 = (alpha * cfg.h1 * cfg.h1 - cfg.h2 * cfg.h2) / (1.0 - alpha);
    if (r2 < 0.0)
        return std::nullopt;
    return std::sqrt(r2);
}

Regime classify(const ChargeConfig& cfg, double tol) {
    Regime reg;
    reg.admissibility = classify_admissibility(cfg, tol);
    if (reg.admissibility == Admissibility::NotAdmissible)
        throw not_admissible_error("no equilibrium measure exists: gamma2 - gamma1 < 1");
    reg.case_tag = case_tag_of(cfg);

    if (auto rc = solve_density_zero(cfg); rc && *rc > 0.0)
        reg.r_c = rc;

    reg.support.outer = solve_outer_radius(cfg, tol);
    reg.support.inner = reg.case_tag == CaseTag::B ? solve_inner_radius(cfg, tol) : 0.0;

    if (reg.admissibility == Admissibility::Admissible)
        check(reg.support.outer.has_value(), "admissible support must be bounded");

    if (reg.support.outer) {
        const double rs = *reg.support.outer;
        if (reg.case_tag == CaseTag::A1)
            check(reg.r_c && rs < *reg.r_c, "R_s < r_c in case A1");
        if (reg.case_tag == CaseTag::B) {
            check(reg.r_c && *reg.r_c < rs, "r_c < R_s in case B");
            check(reg.support.inner > 0.0 && reg.support.inner < rs, "0 < R_0 < R_s in case B");
        }
    }
    return reg;
}

} // namespace ceq
