#include "ceq/oracle.hpp"

#include "ceq/geometry.hpp"
#include "ceq/measure.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ceq {

namespace {

struct EnergyEval {
    double energy;
    double min_dist;
};

// Pair + field energy in one pass; also reports the minimum pair distance
// so the line search can reject near-collisions without a second sweep.
EnergyEval evaluate_energy(const ChargeConfig& cfg, int n, const std::vector<double>& x) {
    const int d = cfg.dim.d;
    const bool log_kernel = d == 2;
    double e = 0.0;
    double min_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double* xi = &x[static_cast<std::size_t>(i) * d];
        for (int j = i + 1; j < n; ++j) {
            const double* xj = &x[static_cast<std::size_t>(j) * d];
            double r2 = 0.0;
            for (int k = 0; k < d; ++k) {
                const double diff = xi[k] - xj[k];
                r2 += diff * diff;
            }
            const double r = std::sqrt(r2);
            min_dist = std::min(min_dist, r);
            if (r == 0.0)
                return {std::numeric_limits<double>::infinity(), 0.0};
            if (log_kernel)
                e -= std::log(r);
            else if (d == 3)
                e += 1.0 / r;
            else
                e += std::pow(r, 2.0 - d);
        }
    }
    double field = 0.0;
    for (int i = 0; i < n; ++i) {
        double r2 = 0.0;
        for (int k = 0; k < d; ++k) {
            const double c = x[static_cast<std::size_t>(i) * d + k];
            r2 += c * c;
        }
        field += Q(cfg, std::sqrt(r2));
    }
    return {e + (n - 1) * field, min_dist};
}

// grad of E_N; writes n x d into g.
void evaluate_gradient(const ChargeConfig& cfg, int n, const std::vector<double>& x,
                       std::vector<double>& g) {
    const int d = cfg.dim.d;
    const bool log_kernel = d == 2;
    std::fill(g.begin(), g.end(), 0.0);
    for (int i = 0; i < n; ++i) {
        const double* xi = &x[static_cast<std::size_t>(i) * d];
        double* gi = &g[static_cast<std::size_t>(i) * d];
        for (int j = i + 1; j < n; ++j) {
            const double* xj = &x[static_cast<std::size_t>(j) * d];
            double* gj = &g[static_cast<std::size_t>(j) * d];
            double r2 = 0.0;
            double diff[3];
            for (int k = 0; k < d; ++k) {
                diff[k] = xi[k] - xj[k];
                r2 += diff[k] * diff[k];
            }
            // dk/dxi = k'(r) (xi-xj)/r: -(xi-xj)/r^2 (log), -(xi-xj)/r^3 (d=3)
            const double c = log_kernel ? -1.0 / r2 : -1.0 / (r2 * std::sqrt(r2));
            for (int k = 0; k < d; ++k) {
                gi[k] += c * diff[k];
                gj[k] -= c * diff[k];
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        double* gi = &g[static_cast<std::size_t>(i) * d];
        const double* xi = &x[static_cast<std::size_t>(i) * d];
        double r2 = 0.0;
        for (int k = 0; k < d; ++k)
            r2 += xi[k] * xi[k];
        const double r = std::sqrt(r2);
        if (r > 0.0) {
            const double qp = (n - 1) * Q_prime(cfg, r) / r;
            for (int k = 0; k < d; ++k)
                gi[k] += qp * xi[k];
        }
    }
}

double max_particle_norm(int n, int d, const std::vector<double>& v) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        double r2 = 0.0;
        for (int k = 0; k < d; ++k) {
            const double c = v[static_cast<std::size_t>(i) * d + k];
            r2 += c * c;
        }
        m = std::max(m, r2);
    }
    return std::sqrt(m);
}

double ks_statistic(const std::vector<double>& sorted_radii, const EquilibriumMeasure& m) {
    const int n = static_cast<int>(sorted_radii.size());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = m.mass(sorted_radii[i]);
        ks = std::max(ks, std::abs((i + 1.0) / n - f));
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
    }
    return ks;
}

} // namespace

double ParticleSystem::radius(int i) const {
    const int d = cfg.dim.d;
    double r2 = 0.0;
    for (int k = 0; k < d; ++k) {
        const double c = x[static_cast<std::size_t>(i) * d + k];
        r2 += c * c;
    }
    return std::sqrt(r2);
}

double discrete_energy(const ParticleSystem& ps) {
    const EnergyEval e = evaluate_energy(ps.cfg, ps.n, ps.x);
    if (e.min_dist == 0.0)
        throw domain_error("discrete_energy: coincident points");
    return e.energy;
}

double pair_energy(Dimension dim, const std::vector<double>& points) {
    const int d = dim.d;
    const int n = static_cast<int>(points.size()) / d;
    double e = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double r2 = 0.0;
            for (int k = 0; k < d; ++k) {
                const double diff = points[static_cast<std::size_t>(i) * d + k] -
                                    points[static_cast<std::size_t>(j) * d + k];
                r2 += diff * diff;
            }
            e += kernel(dim, std::sqrt(r2));
        }
    return e;
}

double local_frostman_residual(const ParticleSystem& ps) {
    std::vector<double> g(ps.x.size());
    evaluate_gradient(ps.cfg, ps.n, ps.x, g);
    return max_particle_norm(ps.n, ps.cfg.dim.d, g) / (ps.n - 1);
}

nlohmann::json OracleResult::to_json() const {
    return nlohmann::json{{"final_energy", final_energy},
                          {"ks_distance", ks_distance},
                          {"min_radius", min_radius},
                          {"max_radius", max_radius},
                          {"frostman_residual", frostman_residual},
                          {"iterations", iterations},
                          {"converged", converged},
                          {"n", system.n},
                          {"radii", radii}};
}

OracleResult minimize(const ChargeConfig& cfg, int n, std::uint64_t seed,
                      const OracleOptions& opts) {
    const int d = cfg.dim.d;
    if (d > 3)
        throw domain_error("minimize: the particle oracle runs in d = 2 or 3 only");
    if (n < 16)
        throw domain_error("minimize: need n >= 16");

    // Uniform cloud in the ball of radius 2 h2, plus a small jitter.
    std::mt19937_64 rng(seed);
    detail::NormalDeviate gauss;
    std::vector<double> x(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n; ++i) {
        double dir[3];
        double norm2 = 0.0;
        for (int k = 0; k < d; ++k) {
            dir[k] = gauss(rng);
            norm2 += dir[k] * dir[k];
        }
        const double r =
            2.0 * cfg.h2 * std::pow(detail::uniform01(rng), 1.0 / d) / std::sqrt(norm2);
        for (int k = 0; k < d; ++k)
            x[static_cast<std::size_t>(i) * d + k] = r * dir[k] + 1e-3 * cfg.h2 * gauss(rng);
    }

    const double guard = opts.guard_factor * std::max(cfg.h1, cfg.h2);
    const double min_sep = 1e-9 * cfg.h2;
    const double step_floor = 1e-14 * cfg.h2;
    double step = opts.step0 > 0.0 ? opts.step0 : 0.1 * cfg.h2;

    EnergyEval cur = evaluate_energy(cfg, n, x);
    std::vector<double> g(x.size()), trial(x.size());
    double residual = std::numeric_limits<double>::infinity();

    bool converged = false;
    int it = 0;
    for (; it < opts.max_iters; ++it) {
        evaluate_gradient(cfg, n, x, g);
        const double gmax = max_particle_norm(n, d, g);
        residual = gmax / (n - 1);
        if (residual < opts.gtol) {
            converged = true;
            break;
        }
        // Backtracking line search along -g/gmax: the largest per-particle
        // displacement equals `step`. Armijo acceptance (a guaranteed slice
        // of the linear-model decrease) keeps accepted steps productive;
        // the step is warm-started and doubled after each acceptance.
        double slope = 0.0; // directional derivative magnitude along -g/gmax
        for (double gk : g)
            slope += gk * gk;
        slope /= gmax;
        bool accepted = false;
        while (step >= step_floor) {
            for (std::size_t k = 0; k < x.size(); ++k)
                trial[k] = x[k] - step / gmax * g[k];
            const EnergyEval cand = evaluate_energy(cfg, n, trial);
            if (std::isfinite(cand.energy) &&
                cand.energy <= cur.energy - 0.25 * step * slope &&
                cand.min_dist > min_sep) {
                x.swap(trial);
                cur = cand;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            break; // line search stalled at machine precision
        step *= 2.0;
        if (max_particle_norm(n, d, x) > guard)
            throw not_confining_error("field not confining: particle cloud escaped radius " +
                                      std::to_string(guard));
    }

    ParticleSystem sys{cfg, n, std::move(x)};
    std::vector<double> radii(n);
    for (int i = 0; i < n; ++i)
        radii[i] = sys.radius(i);
    std::sort(radii.begin(), radii.end());

    const EquilibriumMeasure analytic(cfg);
    OracleResult res{cur.energy,    radii,          ks_statistic(radii, analytic),
                     radii.front(), radii.back(),   residual,
                     it,            converged,      std::move(sys)};
    return res;
}

} // namespace ceq
