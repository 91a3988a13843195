#ifndef CEQ_VERIFY_HPP
#define CEQ_VERIFY_HPP

#include "ceq/measure.hpp"
#include "ceq/signed_balayage.hpp"

#include <functional>

namespace ceq {

/// A finite combination of a radial density on an interval and sphere masses:
/// everything the potential evaluator needs to know about a measure.
struct RadialMeasure {
    Dimension dim;
    std::function<double(double)> density; // dm/dx at radius r; may be empty
    double inner = 0.0;
    std::optional<double> outer;           // nullopt: density extends to infinity
    std::vector<SphereMeasure> spheres;
};

RadialMeasure as_radial_measure(const EquilibriumMeasure& m);
RadialMeasure as_radial_measure(const SignedEquilibrium& eta);

/// Potential U^m(r) of a radial measure, by superposition of sphere potentials:
///   U(r) = int density |S^{d-1}| rho^{d-1} k(max(r,rho)) drho
///        + sum_i mass_i k(max(r, R_i)).
/// Adaptive quadrature split at the kernel kink rho = r; unbounded supports
/// are mapped to [0,1) by rho = a + t/(1-t).
double radial_potential(const RadialMeasure& m, double r, double rel_tol = 1e-10);

/// Grid sizes and spans used by frostman_check.
struct GridSpec {
    int n_interior = 240;       // log-spaced radii on the support
    int n_exterior = 120;       // log-spaced radii per off-support component
    double exterior_span = 1e3; // off-support grid reaches span * outer
    double unbounded_span = 1e4; // interior grid cap (times height scale) when outer = inf
};

/// Outcome of checking the Frostman conditions on a measure:
/// U + Q constant (= F_Q) on the support, U + Q >= F_Q off it.
struct FrostmanReport {
    double f_q = 0.0;                    // mean of U+Q over the interior grid
    double max_dev_on_support = 0.0;     // max |U+Q-F_Q| on the support grid
    double min_margin_off_support = 0.0; // min of U+Q-F_Q off support
    bool has_off_support = false;        // false when the support is all of R^d
    double tol_eq = 0.0;
    bool passed = false;
    GridSpec grid;
    double interior_lo = 0.0, interior_hi = 0.0;

    nlohmann::json to_json() const;
};

FrostmanReport frostman_check(const EquilibriumMeasure& m, double tol_eq = 1e-6,
                              const GridSpec& grid = {});

/// Max deviation of U^{eta_{Q,R}} + Q from its grid mean over [0, R].
double signed_constancy_check(const ChargeConfig& cfg, double R, int n_grid = 96);

struct WeightedEnergy {
    double interaction;    // I(mu) = int U^mu dmu
    double field_integral; // int Q dmu
    double total() const { return interaction + field_integral; } // = F_Q
};

/// I(mu_Q) and int Q dmu_Q by double radial quadrature; total() must agree
/// with FrostmanReport::f_q. field_offset adds a constant to Q.
WeightedEnergy weighted_energy(const EquilibriumMeasure& m, double field_offset = 0.0);

} // namespace ceq

#endif
