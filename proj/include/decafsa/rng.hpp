#ifndef DECAFSA_RNG_HPP
#define DECAFSA_RNG_HPP

#include <cstdint>
#include <random>

namespace decafsa {

// Single RNG engine for the whole library. Every stochastic operation takes
// a Rng& so runs are reproducible from one 64-bit seed.
using Rng = std::mt19937_64;

// Uniform integer in [lo, hi], inclusive.
inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform real in [0, 1).
inline double rand01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double rand_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace decafsa

#endif
