#include "ceq/field.hpp"

#include <cmath>

namespace ceq {

ChargeConfig::ChargeConfig(Dimension dim_, double gamma1_, double gamma2_, double h1_, double h2_)
    : dim(dim_), gamma1(gamma1_), gamma2(gamma2_), h1(h1_), h2(h2_) {
    if (!(gamma1 >= 0.0) || !std::isfinite(gamma1))
        throw domain_error("ChargeConfig: gamma1 must be finite and >= 0");
    if (!(gamma2 > 0.0) || !std::isfinite(gamma2))
        throw domain_error("ChargeConfig: gamma2 must be finite and > 0");
    if (!(h1 > 0.0) || !std::isfinite(h1))
        throw domain_error("ChargeConfig: h1 must be finite and > 0");
    if (!(h2 > 0.0) || !std::isfinite(h2))
        throw domain_error("ChargeConfig: h2 must be finite and > 0");
}

nlohmann::json ChargeConfig::to_json() const {
    return nlohmann::json{
        {"d", dim.d}, {"gamma1", gamma1}, {"gamma2", gamma2}, {"h1", h1}, {"h2", h2}};
}

ChargeConfig ChargeConfig::from_json(const nlohmann::json& j) {
    return ChargeConfig(Dimension(j.at("d").get<int>()), j.at("gamma1").get<double>(),
                        j.at("gamma2").get<double>(), j.at("h1").get<double>(),
                        j.at("h2").get<double>());
}

const char* to_string(Admissibility a) {
    switch (a) {
    case Admissibility::Admissible: return "admissible";
    case Admissibility::WeaklyAdmissible: return "weakly_admissible";
    case Admissibility::NotAdmissible: return "not_admissible";
    }
    return "?";
}

double Q(const ChargeConfig& cfg, double r) {
    const double s1 = r * r + cfg.h1 * cfg.h1; // |x - H1|^2
    const double s2 = r * r + cfg.h2 * cfg.h2;
    if (cfg.dim.d == 2)
        return 0.5 * (cfg.gamma2 * std::log(s2) - cfg.gamma1 * std::log(s1));
    const double e = 0.5 * (2.0 - cfg.dim.d);
    return cfg.gamma1 * std::pow(s1, e) - cfg.gamma2 * std::pow(s2, e);
}

double Q_prime(const ChargeConfig& cfg, double r) {
    if (!(r > 0.0))
        throw domain_error("Q_prime: r must be > 0");
    const int d = cfg.dim.d;
    const double c = std::max(1, d - 2);
    const double s1 = r * r + cfg.h1 * cfg.h1;
    const double s2 = r * r + cfg.h2 * cfg.h2;
    return c * r * (cfg.gamma2 * std::pow(s2, -0.5 * d) - cfg.gamma1 * std::pow(s1, -0.5 * d));
}

double Q_second(const ChargeConfig& cfg, double r) {
    if (!(r > 0.0))
        throw domain_error("Q_second: r must be > 0");
    const int d = cfg.dim.d;
    const double c = std::max(1, d - 2);
    const double s1 = r * r + cfg.h1 * cfg.h1;
    const double s2 = r * r + cfg.h2 * cfg.h2;
    const double t2 = cfg.gamma2 * ((1.0 - d) * r * r + cfg.h2 * cfg.h2) * std::pow(s2, -0.5 * d - 1.0);
    const double t1 = cfg.gamma1 * ((1.0 - d) * r * r + cfg.h1 * cfg.h1) * std::pow(s1, -0.5 * d - 1.0);
    return c * (t2 - t1);
}

Admissibility classify_admissibility(const ChargeConfig& cfg, double tol) {
    if (!(tol > 0.0))
        throw domain_error("classify_admissibility: tol must be > 0");
    const double excess = cfg.gamma2 - cfg.gamma1 - 1.0;
    if (std::abs(excess) <= tol)
        return Admissibility::WeaklyAdmissible;
    return excess > 0.0 ? Admissibility::Admissible : Admissibility::NotAdmissible;
}

bool radial_convexity_condition(const ChargeConfig& cfg) {
    if (cfg.gamma1 == 0.0)
        return true;
    const double ratio = cfg.h1 / cfg.h2;
    return std::pow(cfg.gamma1 / cfg.gamma2, 1.0 / cfg.dim.d) <= ratio &&
           ratio <= std::sqrt(cfg.gamma2 / cfg.gamma1);
}

} // namespace ceq
