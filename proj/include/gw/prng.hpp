#pragma once

#include "gw/rational.hpp"

#include <cstdint>
#include <vector>

namespace gw {

/// SplitMix64. Chosen over <random> engines because the standard
/// distributions are not bit-reproducible across library implementations,
/// and reports must be byte-identical for a given seed on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). Plain modulo; the bias is irrelevant for
    /// sampling test inputs and keeps the mapping trivially portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Integer in [lo, hi] inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Nonzero rational with numerator in [-max_num, max_num] and
    /// denominator in [1, max_den].
    Rat rational(long long max_num, long long max_den) {
        long long num = 0;
        while (num == 0) num = int_in(-max_num, max_num);
        long long den = int_in(1, max_den);
        Rat r(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace gw
