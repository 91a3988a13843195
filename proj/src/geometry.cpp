#include "ceq/geometry.hpp"

#include <cmath>

namespace ceq {

double sphere_area(int d) {
    if (d < 1)
        throw domain_error("sphere_area: d must be >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

double sphere_energy(Dimension dim) {
    // W(S^d) = (4 / (d sqrt(pi))) * Gamma((d+1)/2) / Gamma(d/2)
    const double d = dim.d;
    return 4.0 / (d * std::sqrt(M_PI)) * std::tgamma(0.5 * (d + 1)) / std::tgamma(0.5 * d);
}

double kernel(Dimension dim, double r) {
    if (!(r > 0.0))
        throw domain_error("kernel: r must be > 0");
    if (dim.d == 2)
        return -std::log(r);
    return std::pow(r, 2.0 - dim.d);
}

double kernel_derivative(Dimension dim, double r) {
    if (!(r > 0.0))
        throw domain_error("kernel_derivative: r must be > 0");
    if (dim.d == 2)
        return -1.0 / r;
    return (2.0 - dim.d) * std::pow(r, 1.0 - dim.d);
}

} // namespace ceq
