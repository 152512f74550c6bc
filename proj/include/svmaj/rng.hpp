#pragma once

// Reproducible random stream.
//
// Generator: xoshiro256** (Blackman & Vigna). A stream is identified by
// (seed, stream_index); its 256-bit state is filled by four successive
// SplitMix64 outputs starting from
//     mix64(seed) ^ mix64(stream_index ^ 0xA0761D6478BD642F)
// where mix64 is the SplitMix64 output finaliser. Uniform reals use the top
// 53 bits of one output; complex normals use Box-Muller evaluated in MPFR, so
// every value is bit-identical across platforms for a given precision.

#include "svmaj/real.hpp"

#include <array>
#include <cstdint>

namespace svmaj {

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index);

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64();
    /// k / 2^53 for the top 53 bits k of the next output; in [0, 1).
    double next_unit();

    /// Uniform in [a, b). Throws DomainError unless a < b.
    Real uniform(const Real& a, const Real& b);
    /// Complex normal with independent N(0, 1) real and imaginary parts.
    Complex complex_normal(Bits bits);

private:
    std::uint64_t seed_;
    std::uint64_t stream_index_;
    std::array<std::uint64_t, 4> state_{};
};

/// SplitMix64 output finaliser.
std::uint64_t mix64(std::uint64_t z);

}  // namespace svmaj
