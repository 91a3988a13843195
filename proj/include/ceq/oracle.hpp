#ifndef CEQ_ORACLE_HPP
#define CEQ_ORACLE_HPP

#include "ceq/field.hpp"

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace ceq {

/// A configuration of n particles in R^d (d = 2 or 3), the discrete stand-in
/// for the equilibrium measure. Points are stored row-major, n x d.
struct ParticleSystem {
    ChargeConfig cfg;
    int n;
    std::vector<double> x;

    double radius(int i) const;
};

/// E_N = sum_{i<j} k(|x_i - x_j|) + (N-1) sum_i Q(x_i). The (N-1) field
/// weight makes per-particle stationarity the discrete Frostman condition
/// grad(U_hat + Q) = 0 with U_hat = (1/(N-1)) sum_j k(|x - x_j|).
double discrete_energy(const ParticleSystem& ps);

/// Pairwise kernel energy sum_{i<j} k(|x_i - x_j|) alone (no field term).
double pair_energy(Dimension dim, const std::vector<double>& points);

/// max_i |grad (U_hat + Q)(x_i)|: the discrete equilibrium residual.
double local_frostman_residual(const ParticleSystem& ps);

struct OracleOptions {
    double gtol = 1e-5;        // stop when the frostman residual drops below
    int max_iters = 6000;
    double step0 = -1.0;       // initial line-search step; default 0.1 * h2
    double guard_factor = 300; // blow-up guard radius, times max(h1, h2)
};

struct OracleResult {
    double final_energy = 0.0;
    std::vector<double> radii; // sorted |x_i|
    double ks_distance = 0.0;  // vs the analytic radial mass function
    double min_radius = 0.0;
    double max_radius = 0.0;
    double frostman_residual = 0.0;
    int iterations = 0;
    bool converged = false;
    ParticleSystem system;

    nlohmann::json to_json() const;
};

/// Gradient descent with backtracking line search on discrete_energy,
/// starting from a uniform cloud in the ball of radius 2 h2. Energy is
/// strictly decreasing over accepted steps; steps that collapse a pair
/// below 1e-9 h2 are rejected. Deterministic for a given (seed, opts).
/// Throws not_confining_error if the cloud escapes the guard radius
/// (which happens exactly for non-admissible fields).
OracleResult minimize(const ChargeConfig& cfg, int n, std::uint64_t seed,
                      const OracleOptions& opts = {});

} // namespace ceq

#endif
