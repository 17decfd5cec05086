#pragma once

#include <random>
#include <vector>

#include "montesinos/toroidal.hpp"

namespace testing_support {

using montesinos::KnotParams;
using montesinos::Rational;

// Reduced fractions p/q in (0, 1) with 2 <= q <= max_den, ascending.
inline std::vector<Rational> proper_fractions(std::int64_t max_den) {
    std::vector<Rational> out;
    for (std::int64_t q = 2; q <= max_den; ++q)
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

// Non-integral slopes in (-span, span) with denominator <= max_den.
inline std::vector<Rational> tangle_slopes(std::int64_t max_den, std::int64_t span) {
    std::vector<Rational> out;
    for (const auto& f : proper_fractions(max_den))
        for (std::int64_t k = -span; k < span; ++k) out.push_back(f + Rational(k));
    std::sort(out.begin(), out.end());
    return out;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational slope(std::int64_t max_den, std::int64_t span = 2) {
        for (;;) {
            std::int64_t q = range(2, max_den);
            std::int64_t p = range(-span * q, span * q);
            if (std::gcd(p, q) == 1) return Rational(p, q);
        }
    }

    KnotParams knot(std::int64_t max_den) {
        for (;;) {
            KnotParams k{{slope(max_den), slope(max_den), slope(max_den)}};
            if (montesinos::component_count(k) == 1) return k;
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace testing_support
