#pragma once

#include <cstdint>
#include <random>

#include "kswap/graph.hpp"

namespace kswap {

/// Generator engine for random instances: std::mt19937_64, whose output
/// sequence is fixed by the C++ standard for a given seed and therefore
/// portable across platforms and standard libraries.
using RandomEngine = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw. Used
/// instead of std::uniform_real_distribution, whose algorithm is
/// implementation-defined.
inline double unit_interval(RandomEngine& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

/// G(n, d): each of the n(n-1)/2 pairs (u < v, visited in row-major order)
/// becomes an edge iff one draw from `engine` is below d. Consumes exactly
/// n(n-1)/2 draws. Throws std::invalid_argument if d is outside [0, 1].
Graph gen_random(std::size_t n, double density, RandomEngine& engine);

/// Same as above with a fresh engine seeded by `seed`.
Graph gen_random(std::size_t n, double density, std::uint64_t seed);

}  // namespace kswap
