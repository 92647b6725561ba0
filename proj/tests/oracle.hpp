#pragma once
// Independent brute-force oracles and parameter generators shared by tests.

#include "hyperforge/exact.hpp"
#include "hyperforge/poly.hpp"

#include <random>
#include <vector>

namespace oracle {

using hyperforge::Rational;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // rational with |num|, den <= 12, never a non-positive integer
    Rational rat(long maxn = 12, long maxd = 12) {
        for (;;) {
            Rational r(integer(-maxn, maxn), integer(1, maxd));
            if (!hyperforge::is_nonpos_int(r)) return r;
        }
    }

    // rational that is neither an integer nor a half-integer
    Rational generic(long maxn = 12, long maxd = 12) {
        for (;;) {
            Rational r = rat(maxn, maxd);
            if (denominator(r) != 1 && denominator(Rational(2 * r)) != 1) return r;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// prod_{j<n} (a+j), computed directly
inline Rational rising(const Rational& a, long n) {
    Rational r(1);
    for (long j = 0; j < n; ++j) r *= a + j;
    return r;
}

inline Rational fact(long n) { return rising(Rational(1), n); }

// sum_{n=0}^{N} prod (a)_n / (prod (b)_n n!) w(n) x^n, each term from scratch
template <class W>
Rational brute_sum(const std::vector<Rational>& up, const std::vector<Rational>& lo, long N, W w,
                   const Rational& x = 1) {
    Rational s(0), xn(1);
    for (long n = 0; n <= N; ++n) {
        Rational num(1), den = fact(n);
        for (const auto& a : up) num *= rising(a, n);
        if (num != 0) {
            for (const auto& b : lo) den *= rising(b, n);
            s += num / den * w(n) * xn;
        }
        xn *= x;
    }
    return s;
}

inline Rational brute_sum(const std::vector<Rational>& up, const std::vector<Rational>& lo, long N,
                          const Rational& x = 1) {
    return brute_sum(up, lo, N, [](long) { return Rational(1); }, x);
}

inline long first_zero(const std::vector<Rational>& up) {
    long N = -1;
    for (const auto& a : up)
        if (hyperforge::is_nonpos_int(a)) {
            long m = hyperforge::to_long(-a);
            if (N < 0 || m < N) N = m;
        }
    return N;
}

}  // namespace oracle
