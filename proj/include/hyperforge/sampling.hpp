#pragma once

#include "hyperforge/exact.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hyperforge {

// Seeded generator for parameter draws. Rationals have |num|, den <= 12.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    // never a non-positive integer
    Rational rat(long maxn = 12, long maxd = 12) {
        for (;;) {
            Rational r = Rational(BigInt(integer(-maxn, maxn))) / BigInt(integer(1, maxd));
            if (!is_nonpos_int(r)) return r;
        }
    }

    // neither integer nor half-integer
    Rational generic(long maxn = 12, long maxd = 12) {
        for (;;) {
            Rational r = rat(maxn, maxd);
            if (denominator(r) != 1 && denominator(Rational(2 * r)) != 1) return r;
        }
    }

    std::vector<Rational> rats(int n) {
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) v.push_back(rat());
        return v;
    }

    std::uint64_t next_seed() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

}  // namespace hyperforge
