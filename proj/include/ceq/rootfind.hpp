#ifndef CEQ_ROOTFIND_HPP
#define CEQ_ROOTFIND_HPP

#include "ceq/errors.hpp"

#include <boost/math/tools/roots.hpp>

#include <cstdint>
#include <functional>
#include <utility>

namespace ceq {

/// Expand [x/2, x] or [x, 2x] geometrically from x0 until f changes sign.
/// f(lo) and f(hi) must eventually straddle zero; throws after max_doublings.
template <typename F>
std::pair<double, double> bracket_root(F&& f, double x0, int max_doublings = 200) {
    double lo = x0, hi = x0;
    double flo = f(lo), fhi = flo;
    for (int i = 0; i < max_doublings; ++i) {
        if (flo == 0.0) return {lo, lo};
        if (fhi == 0.0) return {hi, hi};
        if (flo * fhi < 0.0) return {lo, hi};
        if (flo > 0.0) { // assume f decreasing through the root: expand up
            lo = hi;
            flo = fhi;
            hi *= 2.0;
            fhi = f(hi);
        } else { // root below: shrink toward 0
            hi = lo;
            fhi = flo;
            lo *= 0.5;
            flo = f(lo);
        }
    }
    throw domain_error("bracket_root: no sign change found");
}

/// TOMS-748 refinement of a bracketed root to relative width `rel_width`.
template <typename F>
double refine_root(F&& f, double lo, double hi, double rel_width = 1e-13) {
    if (lo == hi) return lo;
    auto stop = [rel_width](double a, double b) {
        return std::abs(b - a) <= rel_width * std::min(std::abs(a), std::abs(b));
    };
    std::uintmax_t max_iter = 200;
    auto r = boost::math::tools::toms748_solve(std::forward<F>(f), lo, hi, stop, max_iter);
    return 0.5 * (r.first + r.second);
}

} // namespace ceq

#endif
