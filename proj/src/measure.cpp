#include "ceq/measure.hpp"

#include "ceq/geometry.hpp"
#include "ceq/quadrature.hpp"
#include "rng.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace ceq {

EquilibriumMeasure::EquilibriumMeasure(const ChargeConfig& cfg, double admissibility_tol)
    : cfg_(cfg), regime_(classify(cfg, admissibility_tol)),
      scale_(cfg.dim.d / sphere_area(cfg.dim)) {}

double EquilibriumMeasure::density(double r) const {
    if (!regime_.support.contains(r))
        return 0.0;
    return scale_ * g_c(cfg_, r);
}

double EquilibriumMeasure::mass(double r) const {
    const SupportSpec& sup = regime_.support;
    if (r <= sup.inner)
        return 0.0;
    const double upper = sup.outer ? std::min(r, *sup.outer) : r;
    return mass_primitive(cfg_, upper) - mass_primitive(cfg_, sup.inner);
}

double EquilibriumMeasure::quadrature_mass(double rel_tol) const {
    const SupportSpec& sup = regime_.support;
    const double d = cfg_.dim.d;
    auto integrand = [this, d](double rho) { return d * std::pow(rho, d - 1.0) * g_c(cfg_, rho); };
    if (sup.outer)
        return integrate(integrand, sup.inner, *sup.outer, rel_tol);
    return integrate_to_infinity(integrand, sup.inner, rel_tol);
}

double EquilibriumMeasure::radius_quantile(double u) const {
    if (!(u >= 0.0 && u < 1.0))
        throw domain_error("radius_quantile: u must lie in [0, 1)");
    const SupportSpec& sup = regime_.support;
    double lo = sup.inner;
    double hi;
    if (sup.outer) {
        hi = *sup.outer;
    } else {
        hi = std::max(2.0 * sup.inner, std::max(cfg_.h2, 1.0));
        while (mass(hi) < u)
            hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mass(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> EquilibriumMeasure::sample(int n, std::uint64_t seed) const {
    if (n < 1)
        throw domain_error("sample: n must be >= 1");
    const int d = cfg_.dim.d;
    std::mt19937_64 rng(seed);
    detail::NormalDeviate gauss;
    std::vector<double> pts(static_cast<std::size_t>(n) * d);
    std::vector<double> dir(d);
    for (int i = 0; i < n; ++i) {
        const double r = radius_quantile(detail::uniform01(rng));
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (int k = 0; k < d; ++k) {
                dir[k] = gauss(rng);
                norm2 += dir[k] * dir[k];
            }
        } while (norm2 == 0.0);
        const double inv = 1.0 / std::sqrt(norm2);
        for (int k = 0; k < d; ++k)
            pts[static_cast<std::size_t>(i) * d + k] = r * dir[k] * inv;
    }
    return pts;
}

void profile_csv(const EquilibriumMeasure& m, const std::vector<double>& radii,
                 std::ostream& out) {
    out << "r,density,mass\n";
    char buf[96];
    for (double r : radii) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r, m.density(r), m.mass(r));
        out << buf;
    }
}

} // namespace ceq
