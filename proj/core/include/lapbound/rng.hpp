#pragma once

#include <cstdint>

namespace lapbound {

/// SplitMix64.  Fixed 64-bit update, so a seed reproduces the same stream on
/// every platform and in any port; random corpora are bit-exact reproducible.
///
/// Derived values are part of the stream contract:
///   next_double(): (next() >> 11) * 2^-53, uniform in [0,1)
///   next_below(b): next() % b
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace lapbound
