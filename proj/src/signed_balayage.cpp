#include "ceq/signed_balayage.hpp"

#include "ceq/geometry.hpp"

#include <cmath>

namespace ceq {

double SignedEquilibrium::continuous_density(double r) const {
    if (r < 0.0 || r > radius)
        return 0.0;
    return cfg.dim.d / sphere_area(cfg.dim) * g_c(cfg, r);
}

double SignedEquilibrium::continuous_mass() const {
    return mass_primitive(cfg, radius);
}

double SignedEquilibrium::sphere_mass() const {
    return g_s(cfg, radius);
}

SignedEquilibrium signed_equilibrium_ball(const ChargeConfig& cfg, double R) {
    if (!(R > 0.0))
        throw domain_error("signed_equilibrium_ball: R must be > 0");
    return SignedEquilibrium{cfg, R};
}

double bal_point_to_plane(Dimension dim, double height, double r) {
    if (height == 0.0)
        throw domain_error("bal_point_to_plane: height must be nonzero");
    const double h2 = height * height;
    return dim.d * h2 / (sphere_area(dim) * std::pow(r * r + h2, 0.5 * (dim.d + 2)));
}

double bal_point_to_ball_boundary(Dimension dim, double u_radius, double R, double cos_angle) {
    if (!(R > 0.0) || u_radius < 0.0)
        throw domain_error("bal_point_to_ball_boundary: need R > 0 and |u| >= 0");
    if (u_radius == R)
        throw domain_error("bal_point_to_ball_boundary: |u| = R is singular");
    if (!(cos_angle >= -1.0 && cos_angle <= 1.0))
        throw domain_error("bal_point_to_ball_boundary: cos_angle must lie in [-1, 1]");
    const double dist2 = u_radius * u_radius + R * R - 2.0 * u_radius * R * cos_angle;
    return std::abs(u_radius * u_radius - R * R) /
           (R * std::pow(dist2, 0.5 * dim.d) * sphere_area(dim));
}

double sphere_kernel_integral(Dimension dim, double R) {
    if (!(R > 0.0))
        throw domain_error("sphere_kernel_integral: R must be > 0");
    if (R == 1.0)
        throw domain_error("sphere_kernel_integral: divergent at R = 1");
    if (R > 1.0)
        return 1.0 / (std::pow(R, dim.d - 2.0) * (R * R - 1.0));
    return 1.0 / (1.0 - R * R);
}

double exterior_sweep_mass(const ChargeConfig& cfg, double R) {
    if (!(R > 0.0))
        throw domain_error("exterior_sweep_mass: R must be > 0");
    return mass_primitive(cfg, R);
}

} // namespace ceq
