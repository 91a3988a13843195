#ifndef CEQ_GEOMETRY_HPP
#define CEQ_GEOMETRY_HPP

#include "ceq/errors.hpp"

namespace ceq {

/// Kind of Coulomb interaction: -log|x| in the plane, |x|^{2-d} for d >= 3.
enum class KernelKind { Log, Newtonian };

/// Ambient dimension d >= 2 of the conductor R^d.
struct Dimension {
    explicit Dimension(int dim) : d(dim) {
        if (dim < 2)
            throw domain_error("Dimension: d must be >= 2, got " + std::to_string(dim));
    }
    int d;

    KernelKind kernel_kind() const { return d == 2 ? KernelKind::Log : KernelKind::Newtonian; }
    bool operator==(const Dimension&) const = default;
};

/// Surface area |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2) of the unit sphere in R^d, d >= 1.
double sphere_area(int d);
inline double sphere_area(Dimension dim) { return sphere_area(dim.d); }

/// Coulomb energy W(S^d) of the unit d-sphere, W(S^d) = 4|S^{d-1}|/(d|S^d|).
double sphere_energy(Dimension dim);

/// Kernel k(r): r^{2-d} for d >= 3, -log r for d = 2. Requires r > 0.
double kernel(Dimension dim, double r);

/// dk/dr; strictly negative on (0, inf). Requires r > 0.
double kernel_derivative(Dimension dim, double r);

} // namespace ceq

#endif
