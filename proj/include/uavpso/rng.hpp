#ifndef UAVPSO_RNG_HPP
#define UAVPSO_RNG_HPP

#include <cstdint>
#include <random>

namespace uavpso {

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
/// Used instead of std::uniform_real_distribution so that seeded runs
/// reproduce bit-exactly across standard libraries.
inline double canonical_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * canonical_unit(gen);
}

}  // namespace uavpso

#endif
