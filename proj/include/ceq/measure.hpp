#ifndef CEQ_MEASURE_HPP
#define CEQ_MEASURE_HPP

#include "ceq/regime.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ceq {

/// The weighted equilibrium measure mu_Q of a charge configuration:
/// radial density d g_c(|x|)/|S^{d-1}| on the classified support, with the
/// closed-form radial mass function F(min(r, outer)) - F(inner).
class EquilibriumMeasure {
public:
    explicit EquilibriumMeasure(const ChargeConfig& cfg, double admissibility_tol = 1e-12);

    const ChargeConfig& config() const { return cfg_; }
    const Regime& regime() const { return regime_; }
    const SupportSpec& support() const { return regime_.support; }

    /// Density w.r.t. Lebesgue measure on R^d at radius r; 0 outside the support.
    double density(double r) const;

    /// mu_Q({|x| <= r}). Accepts r = +inf. 0 at the inner radius, 1 at the outer.
    double mass(double r) const;

    /// Total mass recomputed by adaptive quadrature of the density
    /// (independent of the closed-form mass function).
    double quadrature_mass(double rel_tol = 1e-10) const;

    /// Inverse of mass(): smallest r with mass(r) >= u, by bisection to
    /// 1e-10 absolute width in radius.
    double radius_quantile(double u) const;

    /// n i.i.d. samples (row-major n x d), radius by inverse CDF and
    /// direction uniform on the sphere. Reproducible for a given seed.
    std::vector<double> sample(int n, std::uint64_t seed) const;

    /// Equilibrium constant F_Q, once certified by the verify module.
    std::optional<double> equilibrium_constant;

private:
    ChargeConfig cfg_;
    Regime regime_;
    double scale_; // d / |S^{d-1}|
};

/// CSV profile "r,density,mass" for a list of radii.
void profile_csv(const EquilibriumMeasure& m, const std::vector<double>& radii, std::ostream& out);

} // namespace ceq

#endif
