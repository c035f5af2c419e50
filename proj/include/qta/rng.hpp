#pragma once

#include <cstdint>
#include <random>

#include "qta/field.hpp"

namespace qta {

/* All randomness in the library flows through a seeded generator so that
 * reports and test runs are reproducible bit for bit. */
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
        return d(g);
    }
    long range(long lo, long hi) {  // inclusive
        std::uniform_int_distribution<long> d(lo, hi);
        return d(g);
    }
};

/* Small random field element; over Q numerators stay in [-3, 3] and
 * denominators in {1, 2, 3} to keep Bareiss intermediates tame. */
inline Scalar random_scalar(const Field& f, Rng& rng) {
    if (f.p != 0) return Scalar::mod_p(f, rng.below(f.p));
    return Scalar::rational(rng.range(-3, 3), rng.range(1, 3));
}

inline Scalar random_scalar_nonzero(const Field& f, Rng& rng) {
    for (;;) {
        Scalar s = random_scalar(f, rng);
        if (!s.is_zero()) return s;
    }
}

}  // namespace qta
