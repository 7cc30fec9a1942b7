#pragma once

// Hand-rolled generators for property tests. Every generator takes the
// engine explicitly so a failing case can be replayed from its seed.

#include <random>

#include "moutard/harmonic.hpp"
#include "moutard/poly.hpp"
#include "moutard/rational_fn.hpp"

namespace moutard::testing {

inline BigRational random_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
    return BigRational(make_rational(num(rng), den(rng)));
}

inline BivariatePoly random_poly(std::mt19937_64& rng, unsigned max_degree = 3, unsigned max_terms = 5) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree), count(0, max_terms);
    std::vector<Term> terms;
    const unsigned n = count(rng);
    for (unsigned k = 0; k < n; ++k) {
        unsigned d = deg(rng);
        unsigned i = std::uniform_int_distribution<unsigned>(0, d)(rng);
        terms.push_back({{i, d - i}, random_rational(rng)});
    }
    return BivariatePoly::from_terms(std::move(terms));
}

inline BivariatePoly random_nonzero_poly(std::mt19937_64& rng, unsigned max_degree = 3) {
    for (;;) {
        BivariatePoly p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

inline BivariatePoly random_harmonic(std::mt19937_64& rng, unsigned max_degree, unsigned bound = 10) {
    for (;;) {
        BivariatePoly p = random_combo(max_degree, rng, bound).realized;
        if (!p.is_zero()) return p;
    }
}

/// Random rational function whose denominator has no zero at the sample
/// points used by the callers (positive constant plus a sum of squares).
inline RationalFn random_rf(std::mt19937_64& rng) {
    BivariatePoly s = random_poly(rng, 1, 3);
    BivariatePoly den = BivariatePoly(1) + s * s + BivariatePoly::x() * BivariatePoly::x();
    return {random_poly(rng, 3), den};
}

}  // namespace moutard::testing
