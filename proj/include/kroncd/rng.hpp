#pragma once

#include <cstdint>
#include <random>

#include "kroncd/types.hpp"

namespace kroncd {

/// Deterministic random generator.
///
/// mt19937_64 output is fully specified by the standard, but the std::
/// distributions are not, so normal and gamma variates are produced with
/// explicit algorithms (Box-Muller, Marsaglia-Tsang). Streams derived via
/// derived(master, index) are independent and reproducible, which lets
/// parallel and serial benchmark runs produce identical results.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Substream generator for trial `stream` of a run seeded by `master`.
    static Rng derived(std::uint64_t master, std::uint64_t stream);

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on (0, 1].
    double uniform();

    /// Standard normal N(0, 1).
    double normal();

    /// Standard circular complex normal, E|z|^2 = 1.
    Complex cnormal();

    /// Gamma(shape, scale); shape > 0.
    double gamma(double shape, double scale);

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// SplitMix64 step, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace kroncd
