#include "ceq/verify.hpp"

#include "ceq/geometry.hpp"
#include "ceq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ceq {

namespace {

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(hi);
        return out;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        out.push_back(std::exp(llo + (lhi - llo) * i / (n - 1.0)));
    out.front() = lo;
    out.back() = hi;
    return out;
}

// Compensated (Kahan) mean, independent of evaluation order up to 1e-12.
double kahan_mean(const std::vector<double>& v) {
    double sum = 0.0, comp = 0.0;
    for (double x : v) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(v.size());
}

} // namespace

RadialMeasure as_radial_measure(const EquilibriumMeasure& m) {
    RadialMeasure rm{m.config().dim, {}, m.support().inner, m.support().outer, {}};
    rm.density = [m](double r) { return m.density(r); };
    return rm;
}

RadialMeasure as_radial_measure(const SignedEquilibrium& eta) {
    RadialMeasure rm{eta.cfg.dim, {}, 0.0, eta.radius, {}};
    rm.density = [eta](double r) { return eta.continuous_density(r); };
    rm.spheres.push_back({eta.radius, eta.sphere_mass()});
    return rm;
}

double radial_potential(const RadialMeasure& m, double r, double rel_tol) {
    if (!(r >= 0.0))
        throw domain_error("radial_potential: r must be >= 0");
    const Dimension dim = m.dim;
    double u = 0.0;
    for (const SphereMeasure& s : m.spheres)
        u += s.mass * kernel(dim, std::max(r, s.radius));

    if (m.density) {
        const double area = sphere_area(dim);
        auto w = [&](double rho) {
            return m.density(rho) * area * std::pow(rho, dim.d - 1.0);
        };
        const double a = m.inner;
        // rho < r: the sphere potentials are constant k(r), so that part of
        // the integral is just the enclosed mass times k(r).
        if (r > a) {
            const double cut = m.outer ? std::min(r, *m.outer) : r;
            if (cut > a)
                u += integrate(w, a, cut, rel_tol) * kernel(dim, r);
        }
        // rho > r: each sphere contributes k(rho).
        const double lo = std::max(r, a);
        auto wk = [&](double rho) { return w(rho) * kernel(dim, rho); };
        if (m.outer) {
            if (lo < *m.outer)
                u += integrate(wk, lo, *m.outer, rel_tol);
        } else {
            u += integrate_to_infinity(wk, lo, rel_tol);
        }
    }
    return u;
}

nlohmann::json FrostmanReport::to_json() const {
    return nlohmann::json{
        {"F_Q", f_q},
        {"max_dev_on_support", max_dev_on_support},
        {"min_margin_off_support", has_off_support ? nlohmann::json(min_margin_off_support)
                                                   : nlohmann::json(nullptr)},
        {"tol_eq", tol_eq},
        {"passed", passed},
        {"grid",
         {{"n_interior", grid.n_interior},
          {"n_exterior", grid.n_exterior},
          {"exterior_span", grid.exterior_span},
          {"unbounded_span", grid.unbounded_span},
          {"interior_lo", interior_lo},
          {"interior_hi", interior_hi}}}};
}

FrostmanReport frostman_check(const EquilibriumMeasure& m, double tol_eq, const GridSpec& grid) {
    const ChargeConfig& cfg = m.config();
    const SupportSpec& sup = m.support();
    const RadialMeasure rm = as_radial_measure(m);
    const double scale = std::max(cfg.h1, cfg.h2);

    FrostmanReport rep;
    rep.tol_eq = tol_eq;
    rep.grid = grid;

    // Interior grid: log-spaced over the support (capped when unbounded).
    std::vector<double> interior;
    const double hi = sup.outer ? *sup.outer : grid.unbounded_span * std::max(scale, sup.inner);
    const double lo = sup.inner > 0.0 ? sup.inner : hi * 1e-4;
    if (sup.inner == 0.0)
        interior.push_back(0.0);
    for (double r : logspace(lo, hi, grid.n_interior))
        interior.push_back(r);
    rep.interior_lo = interior.front();
    rep.interior_hi = interior.back();

    std::vector<double> vals;
    vals.reserve(interior.size());
    for (double r : interior)
        vals.push_back(radial_potential(rm, r) + Q(cfg, r));
    rep.f_q = kahan_mean(vals);
    double dev = 0.0;
    for (double v : vals)
        dev = std::max(dev, std::abs(v - rep.f_q));
    rep.max_dev_on_support = dev;

    // Off-support grid: beyond the outer radius and/or inside the hole.
    std::vector<double> off;
    if (sup.outer) {
        const double b = *sup.outer;
        for (double r : logspace(b * (1.0 + 1e-3), b * grid.exterior_span, grid.n_exterior))
            off.push_back(r);
    }
    if (sup.inner > 0.0) {
        off.push_back(0.0);
        for (double r : logspace(sup.inner * 1e-3, sup.inner * (1.0 - 1e-3), grid.n_exterior))
            off.push_back(r);
    }
    rep.has_off_support = !off.empty();
    if (rep.has_off_support) {
        double margin = std::numeric_limits<double>::infinity();
        for (double r : off)
            margin = std::min(margin, radial_potential(rm, r) + Q(cfg, r) - rep.f_q);
        rep.min_margin_off_support = margin;
    }

    rep.passed = rep.max_dev_on_support <= tol_eq &&
                 (!rep.has_off_support || rep.min_margin_off_support >= -tol_eq);
    return rep;
}

double signed_constancy_check(const ChargeConfig& cfg, double R, int n_grid) {
    if (!(R > 0.0))
        throw domain_error("signed_constancy_check: R must be > 0");
    const RadialMeasure rm = as_radial_measure(signed_equilibrium_ball(cfg, R));
    std::vector<double> rs{0.0};
    for (double r : logspace(R * 1e-3, R, n_grid - 1))
        rs.push_back(r);
    std::vector<double> vals;
    vals.reserve(rs.size());
    for (double r : rs)
        vals.push_back(radial_potential(rm, r) + Q(cfg, r));
    const double c = kahan_mean(vals);
    double dev = 0.0;
    for (double v : vals)
        dev = std::max(dev, std::abs(v - c));
    return dev;
}

WeightedEnergy weighted_energy(const EquilibriumMeasure& m, double field_offset) {
    const ChargeConfig& cfg = m.config();
    const SupportSpec& sup = m.support();
    const RadialMeasure rm = as_radial_measure(m);
    const double d = cfg.dim.d;

    auto w = [&](double rho) { return d * std::pow(rho, d - 1.0) * g_c(cfg, rho); };
    auto u_integrand = [&](double rho) { return radial_potential(rm, rho, 1e-9) * w(rho); };
    auto q_integrand = [&](double rho) { return (Q(cfg, rho) + field_offset) * w(rho); };

    WeightedEnergy we{};
    if (sup.outer) {
        we.interaction = integrate(u_integrand, sup.inner, *sup.outer, 1e-8);
        we.field_integral = integrate(q_integrand, sup.inner, *sup.outer, 1e-8);
    } else {
        we.interaction = integrate_to_infinity(u_integrand, sup.inner, 1e-8);
        we.field_integral = integrate_to_infinity(q_integrand, sup.inner, 1e-8);
    }
    return we;
}

} // namespace ceq
