#ifndef CEQ_QUADRATURE_HPP
#define CEQ_QUADRATURE_HPP

#include "ceq/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>

namespace ceq {

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
/// Throws quadrature_error (with the achieved estimate) if the error bound
/// cannot be brought under rel_tol * max(1, |I|).
template <typename F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10) {
    if (a == b) return 0.0;
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0, l1 = 0.0;
    const double val = gk::integrate(std::forward<F>(f), a, b, 15, rel_tol, &err, &l1);
    if (!(err <= 1e3 * rel_tol * std::max(1.0, std::abs(val))) || !std::isfinite(val))
        throw quadrature_error("adaptive quadrature did not converge", val, err);
    return val;
}

/// Integration of f over [a, inf) via the substitution rho = a + t/(1-t),
/// which maps [0,1) onto [a,inf). The integrand must decay fast enough that
/// the transformed integrand vanishes at t = 1.
template <typename F>
double integrate_to_infinity(F&& f, double a, double rel_tol = 1e-10) {
    auto g = [&f, a](double t) {
        if (t >= 1.0) return 0.0;
        const double u = 1.0 - t;
        const double v = f(a + t / u) / (u * u);
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate(g, 0.0, 1.0, rel_tol);
}

} // namespace ceq

#endif
