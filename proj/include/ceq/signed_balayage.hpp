#ifndef CEQ_SIGNED_BALAYAGE_HPP
#define CEQ_SIGNED_BALAYAGE_HPP

#include "ceq/regime.hpp"

namespace ceq {

/// A (possibly negative) multiple of the normalized surface measure on S_R.
struct SphereMeasure {
    double radius;
    double mass;
};

/// Signed equilibrium measure eta_{Q,R} on the ball B_R: a continuous radial
/// part with density d g_c(|x|)/|S^{d-1}| plus the singular sphere part of
/// mass g_s(R) on S_R. Total mass is 1 by the identity F(R) + g_s(R) = 1.
struct SignedEquilibrium {
    ChargeConfig cfg;
    double radius;

    double continuous_density(double r) const; // signed; 0 outside [0, R]
    double continuous_mass() const;            // F(R)
    double sphere_mass() const;                // g_s(R)
    double total_mass() const { return continuous_mass() + sphere_mass(); }
};

SignedEquilibrium signed_equilibrium_ball(const ChargeConfig& cfg, double R);

/// Density at |x| = r of the weak balayage Bal(delta_{(0,height)}, R^d):
/// d h^2 / (|S^{d-1}| (r^2 + h^2)^{(d+2)/2}); a probability density on R^d.
double bal_point_to_plane(Dimension dim, double height, double r);

/// Surface density (w.r.t. the raw surface measure on S_R) of the balayage of
/// a point mass at distance |u| from the origin onto the sphere S_R, evaluated
/// at a surface point s with cos(angle(u, s)) = cos_angle:
///   | |u|^2 - R^2 | / (R |u - s|^d |S^{d-1}|).
/// Requires |u| != R. For |u| > R the total surface mass is (R/|u|)^{d-2};
/// for |u| < R it is 1.
double bal_point_to_ball_boundary(Dimension dim, double u_radius, double R, double cos_angle);

/// (1/|S^{d-1}|) int_{S^{d-1}} |s - R e_1|^{-d} dsigma(s)
/// = 1/(R^{d-2}(R^2-1)) for R > 1, 1/(1-R^2) for R < 1. Requires R != 1.
double sphere_kernel_integral(Dimension dim, double R);

/// Mass of the sphere component created by sweeping the continuous part of
/// the signed equilibrium restricted to B_R onto the exterior boundary:
/// R^d (gamma2 (R^2+h2^2)^{-d/2} - gamma1 (R^2+h1^2)^{-d/2}).
/// Vanishes exactly at R = R_0 in case B.
double exterior_sweep_mass(const ChargeConfig& cfg, double R);

} // namespace ceq

#endif
