// oracles.hpp
//
// Test-side reference implementations, independent of the library's
// computational paths: trial-division arithmetic functions and brute-force
// sums used to freeze expected values. Quadrature oracles in the suites are
// built directly on the defining integrals via gbx::quad.

#pragma once

#include "gbx/numeric.hpp"

#include <cmath>
#include <cstdint>

namespace oracle_ref {

// log p if n = p^k (trial division), else 0
inline double naive_lambda(std::uint64_t n) {
    if (n < 2) return 0.0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint64_t m = n;
            while (m % p == 0) m /= p;
            return m == 1 ? std::log((double)p) : 0.0;
        }
    }
    return std::log((double)n);
}

inline double naive_psi(double t) {
    double s = 0;
    for (std::uint64_t n = 2; (double)n <= t; ++n) s += naive_lambda(n);
    return s;
}

// ordered-pair convolution, straight double loop over all m
inline double naive_goldbach_r(std::uint64_t n) {
    double s = 0;
    for (std::uint64_t m = 2; m + 2 <= n; ++m) s += naive_lambda(m) * naive_lambda(n - m);
    return s;
}

inline double naive_cesaro_lhs(std::uint64_t N) {
    double s = 0;
    for (std::uint64_t n = 4; n <= N; ++n) s += naive_goldbach_r(n) * (double)(N - n);
    return s;
}

} // namespace oracle_ref
