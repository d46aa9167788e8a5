#pragma once

#include <random>

#include "umf/ringmat.hpp"
#include "umf/ringpoly.hpp"

namespace umf::testing {

inline constexpr std::uint64_t kSeed = 1729;

/// Random polynomial with exponents in [lo, hi] per variable; each monomial is
/// present with probability `density`.
inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, int lo, int hi, double density = 0.3) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<std::uint32_t> coeff(1, ring->field().order() - 1);
    std::vector<Term> terms;
    Monomial m;
    const int n = ring->nvars();
    std::vector<int> lows(n), highs(n);
    for (int i = 0; i < n; ++i) {
        lows[i] = ring->is_laurent(i) ? lo : std::max(lo, 0);
        highs[i] = hi;
        m.e[i] = lows[i];
    }
    for (;;) {
        if (keep(rng)) terms.push_back({m, coeff(rng)});
        int i = 0;
        while (i < n && m.e[i] == highs[i]) {
            m.e[i] = lows[i];
            ++i;
        }
        if (i == n) break;
        ++m.e[i];
    }
    return Poly::from_terms(ring, std::move(terms));
}

inline RingMatrix random_matrix(const RingPtr& ring, std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                int lo, int hi, double density = 0.3) {
    RingMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(ring, rng, lo, hi, density);
    return m;
}

inline FieldElem random_elem(const Field& f, std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, f.order() - 1);
    return f.elem(d(rng));
}

}  // namespace umf::testing
