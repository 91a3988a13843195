#include "ceq/capi.h"

#include "ceq/errors.hpp"
#include "ceq/geometry.hpp"
#include "ceq/measure.hpp"
#include "ceq/oracle.hpp"
#include "ceq/regime.hpp"
#include "ceq/signed_balayage.hpp"
#include "ceq/verify.hpp"

#include <cstring>
#include <limits>
#include <string>

namespace {

thread_local std::string g_last_error;

ceq_status fail(ceq_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

// Runs f, translating C++ exceptions into status codes.
template <typename F>
ceq_status guarded(F&& f) {
    try {
        return f();
    } catch (const ceq::not_admissible_error& e) {
        return fail(CEQ_ERR_NOT_ADMISSIBLE, e.what());
    } catch (const ceq::regime_error& e) {
        return fail(CEQ_ERR_NO_INNER_RADIUS, e.what());
    } catch (const ceq::quadrature_error& e) {
        return fail(CEQ_ERR_NUMERIC, e.what());
    } catch (const ceq::not_confining_error& e) {
        return fail(CEQ_ERR_NOT_CONFINING, e.what());
    } catch (const ceq::domain_error& e) {
        return fail(CEQ_ERR_DOMAIN, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(CEQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(CEQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CEQ_ERR_INTERNAL, "unknown error");
    }
}

ceq_admissibility map_admissibility(ceq::Admissibility a) {
    switch (a) {
    case ceq::Admissibility::Admissible: return CEQ_ADMISSIBLE;
    case ceq::Admissibility::WeaklyAdmissible: return CEQ_WEAKLY_ADMISSIBLE;
    case ceq::Admissibility::NotAdmissible: return CEQ_NOT_ADMISSIBLE;
    }
    return CEQ_NOT_ADMISSIBLE;
}

ceq_case_tag map_case(ceq::CaseTag c) {
    switch (c) {
    case ceq::CaseTag::A1: return CEQ_CASE_A1;
    case ceq::CaseTag::A2: return CEQ_CASE_A2;
    case ceq::CaseTag::B: return CEQ_CASE_B;
    case ceq::CaseTag::C: return CEQ_CASE_C;
    }
    return CEQ_CASE_A1;
}

ceq_support_type map_support(ceq::SupportType t) {
    switch (t) {
    case ceq::SupportType::Ball: return CEQ_SUPPORT_BALL;
    case ceq::SupportType::Shell: return CEQ_SUPPORT_SHELL;
    case ceq::SupportType::WholeSpace: return CEQ_SUPPORT_WHOLE_SPACE;
    case ceq::SupportType::ComplementOfBall: return CEQ_SUPPORT_COMPLEMENT_OF_BALL;
    }
    return CEQ_SUPPORT_BALL;
}

void fill_regime_info(const ceq::Regime& reg, ceq_regime_info* out) {
    out->case_tag = map_case(reg.case_tag);
    out->admissibility = map_admissibility(reg.admissibility);
    out->support_type = map_support(reg.support.type());
    out->inner = reg.support.inner;
    out->outer_finite = reg.support.outer.has_value() ? 1 : 0;
    out->outer = reg.support.outer.value_or(0.0);
    out->has_r_c = reg.r_c.has_value() ? 1 : 0;
    out->r_c = reg.r_c.value_or(0.0);
}

} // namespace

struct ceq_config {
    ceq::ChargeConfig cfg;
};

struct ceq_measure {
    ceq::EquilibriumMeasure m;
};

extern "C" {

const char* ceq_status_name(ceq_status s) {
    switch (s) {
    case CEQ_OK: return "ok";
    case CEQ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CEQ_ERR_NOT_ADMISSIBLE: return "not_admissible";
    case CEQ_ERR_NO_INNER_RADIUS: return "no_inner_radius";
    case CEQ_ERR_DOMAIN: return "domain_error";
    case CEQ_ERR_NUMERIC: return "numeric_error";
    case CEQ_ERR_NOT_CONFINING: return "not_confining";
    case CEQ_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case CEQ_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* ceq_last_error(void) { return g_last_error.c_str(); }

const char* ceq_version(void) { return "1.0.0"; }

ceq_status ceq_config_create(int d, double gamma1, double gamma2, double h1, double h2,
                             ceq_config** out) {
    if (!out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = new ceq_config{ceq::ChargeConfig(ceq::Dimension(d), gamma1, gamma2, h1, h2)};
        return CEQ_OK;
    });
}

ceq_status ceq_config_from_json(const char* json_text, ceq_config** out) {
    if (!json_text || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "json_text and out must not be null");
    *out = nullptr;
    return guarded([&] {
        const auto j = nlohmann::json::parse(json_text);
        *out = new ceq_config{ceq::ChargeConfig::from_json(j)};
        return CEQ_OK;
    });
}

void ceq_config_free(ceq_config* cfg) { delete cfg; }

ceq_status ceq_config_get(const ceq_config* cfg, int* d, double* gamma1, double* gamma2,
                          double* h1, double* h2) {
    if (!cfg)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg must not be null");
    if (d) *d = cfg->cfg.dim.d;
    if (gamma1) *gamma1 = cfg->cfg.gamma1;
    if (gamma2) *gamma2 = cfg->cfg.gamma2;
    if (h1) *h1 = cfg->cfg.h1;
    if (h2) *h2 = cfg->cfg.h2;
    return CEQ_OK;
}

ceq_status ceq_sphere_area(int d, double* out) {
    return guarded([&] {
        *out = ceq::sphere_area(d);
        return CEQ_OK;
    });
}

ceq_status ceq_sphere_energy(int d, double* out) {
    return guarded([&] {
        *out = ceq::sphere_energy(ceq::Dimension(d));
        return CEQ_OK;
    });
}

ceq_status ceq_kernel(int d, double r, double* out) {
    return guarded([&] {
        *out = ceq::kernel(ceq::Dimension(d), r);
        return CEQ_OK;
    });
}

ceq_status ceq_field_q(const ceq_config* cfg, double r, double* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = ceq::Q(cfg->cfg, r);
        return CEQ_OK;
    });
}

ceq_status ceq_field_q_prime(const ceq_config* cfg, double r, double* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = ceq::Q_prime(cfg->cfg, r);
        return CEQ_OK;
    });
}

ceq_status ceq_field_q_second(const ceq_config* cfg, double r, double* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = ceq::Q_second(cfg->cfg, r);
        return CEQ_OK;
    });
}

ceq_status ceq_radial_convexity(const ceq_config* cfg, int* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = ceq::radial_convexity_condition(cfg->cfg) ? 1 : 0;
        return CEQ_OK;
    });
}

ceq_status ceq_classify_admissibility(const ceq_config* cfg, double tol,
                                      ceq_admissibility* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = map_admissibility(ceq::classify_admissibility(cfg->cfg, tol));
        return CEQ_OK;
    });
}

ceq_status ceq_classify(const ceq_config* cfg, double tol, ceq_regime_info* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        fill_regime_info(ceq::classify(cfg->cfg, tol), out);
        return CEQ_OK;
    });
}

ceq_status ceq_g_c(const ceq_config* cfg, double r, double* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = ceq::g_c(cfg->cfg, r);
        return CEQ_OK;
    });
}

ceq_status ceq_g_s(const ceq_config* cfg, double R, double* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = ceq::g_s(cfg->cfg, R);
        return CEQ_OK;
    });
}

ceq_status ceq_outer_radius(const ceq_config* cfg, int* finite, double* R_s) {
    if (!cfg || !finite || !R_s)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg, finite and R_s must not be null");
    return guarded([&] {
        const auto r = ceq::solve_outer_radius(cfg->cfg);
        *finite = r.has_value() ? 1 : 0;
        *R_s = r.value_or(0.0);
        return CEQ_OK;
    });
}

ceq_status ceq_inner_radius(const ceq_config* cfg, double* R_0) {
    if (!cfg || !R_0)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and R_0 must not be null");
    return guarded([&] {
        *R_0 = ceq::solve_inner_radius(cfg->cfg);
        return CEQ_OK;
    });
}

ceq_status ceq_density_zero(const ceq_config* cfg, int* exists, double* r_c) {
    if (!cfg || !exists || !r_c)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg, exists and r_c must not be null");
    return guarded([&] {
        const auto r = ceq::solve_density_zero(cfg->cfg);
        *exists = r.has_value() ? 1 : 0;
        *r_c = r.value_or(0.0);
        return CEQ_OK;
    });
}

ceq_status ceq_measure_create(const ceq_config* cfg, ceq_measure** out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = new ceq_measure{ceq::EquilibriumMeasure(cfg->cfg)};
        return CEQ_OK;
    });
}

void ceq_measure_free(ceq_measure* m) { delete m; }

ceq_status ceq_measure_regime(const ceq_measure* m, ceq_regime_info* out) {
    if (!m || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m and out must not be null");
    fill_regime_info(m->m.regime(), out);
    return CEQ_OK;
}

ceq_status ceq_measure_density(const ceq_measure* m, double r, double* out) {
    if (!m || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m and out must not be null");
    return guarded([&] {
        *out = m->m.density(r);
        return CEQ_OK;
    });
}

ceq_status ceq_measure_mass(const ceq_measure* m, double r, double* out) {
    if (!m || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m and out must not be null");
    return guarded([&] {
        *out = m->m.mass(r);
        return CEQ_OK;
    });
}

ceq_status ceq_measure_quadrature_mass(const ceq_measure* m, double* out) {
    if (!m || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m and out must not be null");
    return guarded([&] {
        *out = m->m.quadrature_mass();
        return CEQ_OK;
    });
}

ceq_status ceq_measure_potential(const ceq_measure* m, double r, double* out) {
    if (!m || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m and out must not be null");
    return guarded([&] {
        *out = ceq::radial_potential(ceq::as_radial_measure(m->m), r);
        return CEQ_OK;
    });
}

ceq_status ceq_measure_sample(const ceq_measure* m, int n, uint64_t seed, double* points) {
    if (!m || !points)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m and points must not be null");
    return guarded([&] {
        const auto pts = m->m.sample(n, seed);
        std::memcpy(points, pts.data(), pts.size() * sizeof(double));
        return CEQ_OK;
    });
}

ceq_status ceq_frostman_check(const ceq_measure* m, double tol_eq, ceq_frostman_report* out) {
    if (!m || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m and out must not be null");
    return guarded([&] {
        const ceq::FrostmanReport rep = ceq::frostman_check(m->m, tol_eq);
        out->f_q = rep.f_q;
        out->max_dev_on_support = rep.max_dev_on_support;
        out->min_margin_off_support = rep.has_off_support
                                          ? rep.min_margin_off_support
                                          : std::numeric_limits<double>::infinity();
        out->has_off_support = rep.has_off_support ? 1 : 0;
        out->passed = rep.passed ? 1 : 0;
        return CEQ_OK;
    });
}

ceq_status ceq_signed_constancy(const ceq_config* cfg, double R, int n_grid, double* max_dev) {
    if (!cfg || !max_dev)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and max_dev must not be null");
    return guarded([&] {
        *max_dev = ceq::signed_constancy_check(cfg->cfg, R, n_grid > 0 ? n_grid : 96);
        return CEQ_OK;
    });
}

ceq_status ceq_weighted_energy(const ceq_measure* m, double* interaction,
                               double* field_integral) {
    if (!m || !interaction || !field_integral)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "m, interaction and field_integral must not be null");
    return guarded([&] {
        const ceq::WeightedEnergy we = ceq::weighted_energy(m->m);
        *interaction = we.interaction;
        *field_integral = we.field_integral;
        return CEQ_OK;
    });
}

ceq_status ceq_signed_masses(const ceq_config* cfg, double R, double* continuous_mass,
                             double* sphere_mass) {
    if (!cfg || !continuous_mass || !sphere_mass)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out masses must not be null");
    return guarded([&] {
        const ceq::SignedEquilibrium eta = ceq::signed_equilibrium_ball(cfg->cfg, R);
        *continuous_mass = eta.continuous_mass();
        *sphere_mass = eta.sphere_mass();
        return CEQ_OK;
    });
}

ceq_status ceq_bal_point_to_plane(int d, double height, double r, double* out) {
    if (!out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "out must not be null");
    return guarded([&] {
        *out = ceq::bal_point_to_plane(ceq::Dimension(d), height, r);
        return CEQ_OK;
    });
}

ceq_status ceq_bal_point_to_ball_boundary(int d, double u_radius, double R, double cos_angle,
                                          double* out) {
    if (!out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "out must not be null");
    return guarded([&] {
        *out = ceq::bal_point_to_ball_boundary(ceq::Dimension(d), u_radius, R, cos_angle);
        return CEQ_OK;
    });
}

ceq_status ceq_sphere_kernel_integral(int d, double R, double* out) {
    if (!out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "out must not be null");
    return guarded([&] {
        *out = ceq::sphere_kernel_integral(ceq::Dimension(d), R);
        return CEQ_OK;
    });
}

ceq_status ceq_exterior_sweep_mass(const ceq_config* cfg, double R, double* out) {
    if (!cfg || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg and out must not be null");
    return guarded([&] {
        *out = ceq::exterior_sweep_mass(cfg->cfg, R);
        return CEQ_OK;
    });
}

void ceq_oracle_opts_default(ceq_oracle_opts* opts) {
    if (!opts)
        return;
    opts->n = 512;
    opts->seed = 1;
    opts->gtol = 1e-5;
    opts->max_iters = 6000;
    opts->step0 = -1.0;
    opts->guard_factor = -1.0;
}

ceq_status ceq_oracle_minimize(const ceq_config* cfg, const ceq_oracle_opts* opts,
                               ceq_oracle_result* out, double* points, double* radii) {
    if (!cfg || !opts || !out)
        return fail(CEQ_ERR_INVALID_ARGUMENT, "cfg, opts and out must not be null");
    return guarded([&] {
        ceq::OracleOptions o;
        o.gtol = opts->gtol;
        o.max_iters = opts->max_iters;
        o.step0 = opts->step0;
        if (opts->guard_factor > 0.0)
            o.guard_factor = opts->guard_factor;
        const ceq::OracleResult r = ceq::minimize(cfg->cfg, opts->n, opts->seed, o);
        out->final_energy = r.final_energy;
        out->ks_distance = r.ks_distance;
        out->min_radius = r.min_radius;
        out->max_radius = r.max_radius;
        out->frostman_residual = r.frostman_residual;
        out->iterations = r.iterations;
        out->converged = r.converged ? 1 : 0;
        if (points)
            std::memcpy(points, r.system.x.data(), r.system.x.size() * sizeof(double));
        if (radii)
            std::memcpy(radii, r.radii.data(), r.radii.size() * sizeof(double));
        return CEQ_OK;
    });
}

} // extern "C"
