#pragma once

#include <cstdint>

namespace zakfiber {

/// Deterministic 64-bit generator (SplitMix64, Steele-Lea-Flood update).
/// Every randomized path in the library and the CLI draws from this
/// generator so that identical seeds reproduce byte-identical reports.
///
/// Derived draws, fixed here once for all consumers:
///   uniform01  : (next() >> 11) * 2^-53, in [0, 1)
///   symmetric  : 2*uniform01() - 1, in [-1, 1)
///   below(n)   : next() % n (the tiny modulo bias is irrelevant for
///                test-instance generation and keeps the stream spec short)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double symmetric() { return 2.0 * uniform01() - 1.0; }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

} // namespace zakfiber
