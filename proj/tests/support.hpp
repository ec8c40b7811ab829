#pragma once

// Random inputs shared by the property tests.

#include <algorithm>
#include <random>

#include "tlst/coeffring.hpp"
#include "tlst/partition.hpp"

namespace tlst::testing {

// Each variable appears with probability 1/3, exponent in [-2, 2].
inline Poly random_poly(std::mt19937_64& rng, int terms = 3) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
        ExpVec e{};
        for (auto& x : e) x = rng() % 3 ? 0 : static_cast<int>(rng() % 5) - 2;
        p += Poly::monomial(e, Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
    }
    return p;
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, int terms = 3) {
    for (;;) {
        auto p = random_poly(rng, terms);
        if (!p.is_zero()) return p;
    }
}

inline Scalar random_scalar(std::mt19937_64& rng) {
    return {RatFn(random_poly(rng, 2), random_nonzero_poly(rng, 1)), RatFn(random_poly(rng, 2), random_nonzero_poly(rng, 2))};
}

/// Both components polynomial; keeps products of mirror images small.
inline Scalar random_poly_scalar(std::mt19937_64& rng) { return {RatFn(random_poly(rng, 2)), RatFn(random_poly(rng, 2))}; }

inline TiePartition random_partition(std::mt19937_64& rng, std::size_t n, int ties) {
    TiePartition p(n);
    for (int k = 0; k < ties; ++k) p = p.tied(static_cast<int>(rng() % (n + 1)), static_cast<int>(rng() % (n + 1)));
    return p;
}

}  // namespace tlst::testing
