#ifndef CEQ_FIELD_HPP
#define CEQ_FIELD_HPP

#include "ceq/geometry.hpp"

#include <json.hpp>

namespace ceq {

/// A pair of charges above R^d: a repellent charge gamma1 >= 0 at height h1
/// and an attractor of strength gamma2 > 0 at height h2 (its sign is applied
/// inside the formulas). This is the entire problem instance.
struct ChargeConfig {
    ChargeConfig(Dimension dim_, double gamma1_, double gamma2_, double h1_, double h2_);

    Dimension dim;
    double gamma1;
    double gamma2;
    double h1;
    double h2;

    /// Canonical JSON form {"d":int,"gamma1":num,"gamma2":num,"h1":num,"h2":num}.
    nlohmann::json to_json() const;
    static ChargeConfig from_json(const nlohmann::json& j);
};

/// gamma2 - gamma1 > 1 gives a compactly supported equilibrium measure,
/// equality is the borderline (possibly unbounded support), anything below
/// has no equilibrium measure at all.
enum class Admissibility { Admissible, WeaklyAdmissible, NotAdmissible };

const char* to_string(Admissibility a);

/// External field Q at radius r = |x| (the field is radial on R^d).
double Q(const ChargeConfig& cfg, double r);

/// Radial derivative Q'(r), r > 0.
double Q_prime(const ChargeConfig& cfg, double r);

/// Second radial derivative Q''(r), r > 0.
double Q_second(const ChargeConfig& cfg, double r);

Admissibility classify_admissibility(const ChargeConfig& cfg, double tol = 1e-12);

/// True iff r^{d-1} Q'(r) is increasing on (0, inf), i.e.
/// (gamma1/gamma2)^{1/d} <= h1/h2 <= (gamma2/gamma1)^{1/2}.
/// Trivially true for gamma1 = 0.
bool radial_convexity_condition(const ChargeConfig& cfg);

} // namespace ceq

#endif
