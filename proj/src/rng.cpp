#include "svmaj/rng.hpp"

#include "svmaj/errors.hpp"

namespace svmaj {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamSalt = 0xA0761D6478BD642FULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index) : seed_(seed), stream_index_(stream_index) {
    std::uint64_t sm = mix64(seed) ^ mix64(stream_index ^ kStreamSalt);
    for (auto& word : state_) {
        sm += kGolden;
        word = mix64(sm);
    }
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

Real RngStream::uniform(const Real& a, const Real& b) {
    if (!(a < b)) throw DomainError("uniform: empty interval");
    const Bits bits = std::max(a.precision(), b.precision());
    return a + (b - a) * Real(next_unit(), bits);
}

Complex RngStream::complex_normal(Bits bits) {
    // u1 in (0, 1] keeps the logarithm finite.
    const Real u1 = Real(1L, bits) - Real(next_unit(), bits);
    const Real u2(next_unit(), bits);
    const Real radius = sqrt(log(u1) * -2L);
    const Real angle = Real::pi(bits) * 2L * u2;
    return {radius * cos(angle), radius * sin(angle)};
}

}  // namespace svmaj
