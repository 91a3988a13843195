#ifndef CEQ_REGIME_HPP
#define CEQ_REGIME_HPP

#include "ceq/field.hpp"

#include <optional>

namespace ceq {

/// The four parameter regions of the charge pair. The boundary h1 = h2 is
/// assigned to A2 (single effective charge), gamma1 = 0 to A2/C (ratio +inf),
/// and ties at the case boundaries resolve to A2 and C.
enum class CaseTag { A1, A2, B, C };

enum class SupportType { Ball, Shell, WholeSpace, ComplementOfBall };

const char* to_string(CaseTag c);
const char* to_string(SupportType t);

/// Radially symmetric support [inner, outer]; outer std::nullopt means the
/// support is unbounded (weakly admissible regimes only).
struct SupportSpec {
    double inner = 0.0;
    std::optional<double> outer;

    SupportType type() const {
        if (inner > 0.0)
            return outer ? SupportType::Shell : SupportType::ComplementOfBall;
        return outer ? SupportType::Ball : SupportType::WholeSpace;
    }
    bool contains(double r) const { return r >= inner && (!outer || r <= *outer); }
};

struct Regime {
    CaseTag case_tag;
    Admissibility admissibility;
    SupportSpec support;
    std::optional<double> r_c; // positive zero of g_c, when it exists

    nlohmann::json to_json() const;
};

/// Density generator of the signed equilibrium measure on a ball:
/// g_c(r) = gamma2 h2^2/(r^2+h2^2)^{d/2+1} - gamma1 h1^2/(r^2+h1^2)^{d/2+1}.
/// The density of mu_Q is d g_c(|x|)/|S^{d-1}| on the support.
double g_c(const ChargeConfig& cfg, double r);

/// Mass of the singular sphere component of the signed equilibrium measure
/// on B_R: g_s(R) = 1 - gamma2 R^d/(R^2+h2^2)^{d/2} + gamma1 R^d/(R^2+h1^2)^{d/2}.
double g_s(const ChargeConfig& cfg, double R);

/// F(r) = 1 - g_s(r), the antiderivative of d r^{d-1} g_c(r) with F(0) = 0.
/// Accepts r = +inf, where F = gamma2 - gamma1.
double mass_primitive(const ChargeConfig& cfg, double r);

/// Case tag per the (h1, h2, gamma2/gamma1) partition.
CaseTag case_tag_of(const ChargeConfig& cfg);

/// Outer support radius R_s: the positive zero of g_s, bracketed by geometric
/// expansion and refined to relative width 1e-13. Returns std::nullopt when
/// the support is unbounded (weakly admissible, cases A2/B/C).
/// Throws not_admissible_error when no equilibrium measure exists.
std::optional<double> solve_outer_radius(const ChargeConfig& cfg, double tol = 1e-12);

/// Inner support radius R_0, the zero of Q', in closed form
/// R_0^2 = (beta h2^2 - h1^2)/(1 - beta), beta = (gamma1/gamma2)^{2/d}.
/// Only defined in case B; throws regime_error otherwise.
double solve_inner_radius(const ChargeConfig& cfg, double tol = 1e-12);

/// Positive zero r_c of g_c in closed form, when it exists
/// (returns 0 exactly at the transition gamma2/gamma1 = (h2/h1)^d).
std::optional<double> solve_density_zero(const ChargeConfig& cfg);

/// Full classification: case tag, admissibility, support radii, r_c.
/// Throws not_admissible_error when gamma2 - gamma1 < 1 - tol.
Regime classify(const ChargeConfig& cfg, double tol = 1e-12);

} // namespace ceq

#endif
