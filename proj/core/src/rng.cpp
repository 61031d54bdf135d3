#include "slr/rng.hpp"

#include <cmath>

namespace slr {

double Rng::normal() noexcept {
    // Box-Muller, cosine branch only. Consumes exactly two uniforms per
    // draw, which keeps the stream layout independent of caller history.
    const double u1 = uniform01_open0();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return r * std::cos(two_pi * u2);
}

}  // namespace slr
