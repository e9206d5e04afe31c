#pragma once

#include <cstdint>

namespace mshuff {

// Deterministic generator with an explicitly pinned algorithm (splitmix64),
// so seeded reports are byte-identical across platforms and standard library
// versions. Not for cryptography.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) {
        return next() % n;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace mshuff
