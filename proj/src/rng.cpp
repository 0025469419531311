#include "kroncd/rng.hpp"

#include <cmath>

namespace kroncd {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng Rng::derived(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t state = master ^ (0xa0761d6478bd642fULL * (stream + 1));
    std::uint64_t seed = splitmix64(state);
    seed ^= splitmix64(state) << 1;
    return Rng(seed);
}

double Rng::uniform() {
    // 53-bit mantissa, shifted into (0, 1] so log() is safe.
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::cnormal() {
    return Complex(normal(), normal()) * M_SQRT1_2;
}

double Rng::gamma(double shape, double scale) {
    if (shape < 1.0) {
        // Boost to shape + 1 and correct with a uniform power.
        double g = gamma(shape + 1.0, 1.0);
        double u = uniform();
        return scale * g * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze.
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

}  // namespace kroncd
