#pragma once

#include <cstdint>
#include <random>

#include "resolvent/certify/system.hpp"

namespace resolvent::certify {

/**
 * std::mt19937_64 with hand-written transforms. The standard distributions
 * are implementation-defined, so uniform doubles, normals (Marsaglia polar
 * method) and bounded integers are derived here to keep streams identical
 * across standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double normal();
    /// Uniform in 0..n-1 by rejection.
    std::uint64_t below(std::uint64_t n);
    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

[[nodiscard]] Vec3 random_unit_vector(Rng& rng);
/// Independent standard normal upper-triangle entries.
[[nodiscard]] QuadraticSystem gaussian_system(Rng& rng, std::size_t k);
/// Haar-distributed rotation (QR of a Gaussian matrix, det fixed to +1).
[[nodiscard]] Mat3 random_rotation(Rng& rng);

}  // namespace resolvent::certify
