#ifndef CEQ_ERRORS_HPP
#define CEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ceq {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The external field does not confine a unit charge (gamma2 - gamma1 < 1):
/// no equilibrium measure exists.
class not_admissible_error : public error {
public:
    using error::error;
};

/// Argument outside the mathematical domain of a formula (kernel at r <= 0,
/// Poisson kernel at |u| = R, ...).
class domain_error : public error {
public:
    using error::error;
};

/// An operation was requested in a regime where it is undefined
/// (e.g. inner radius outside case B).
class regime_error : public error {
public:
    using error::error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
/// Carries the best estimate achieved.
class quadrature_error : public error {
public:
    quadrature_error(const std::string& msg, double estimate, double error_bound)
        : error(msg), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// Particle minimization diverged: the field does not confine the particles.
class not_confining_error : public error {
public:
    using error::error;
};

} // namespace ceq

#endif
