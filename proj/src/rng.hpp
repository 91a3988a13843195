#ifndef CEQ_SRC_RNG_HPP
#define CEQ_SRC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace ceq::detail {

// Uniform and normal deviates built directly on mt19937_64 so that streams
// are reproducible across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

class NormalDeviate {
public:
    double operator()(std::mt19937_64& rng) {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01(rng);
        while (u1 <= 0.0)
            u1 = uniform01(rng);
        const double u2 = uniform01(rng);
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * M_PI * u2);
        has_spare_ = true;
        return mag * std::cos(2.0 * M_PI * u2);
    }

private:
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ceq::detail

#endif
