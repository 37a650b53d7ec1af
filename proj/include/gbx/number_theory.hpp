// number_theory.hpp
//
// Exact-at-working-precision arithmetic layer: von Mangoldt Lambda, the
// Chebyshev psi step function, Goldbach counts r_G, the Cesaro-weighted
// left-hand side sum_{n<=N} r_G(n)(N-n), and an independent oracle for it
// that integrates psi(t)psi(u-t) exactly as a product of step functions.
//
// Everything here is plain double with compensated accumulation; the values
// involved stay below ~N^3/6 and the downstream identity checks only need
// 1e-10 relative. Λ(p^k) = log p is re-derivable at any precision tier via
// lambda_log<R>.

#pragma once

#include "gbx/numeric.hpp"

#include <cstdint>
#include <map>
#include <mutex>

namespace gbx {

double von_mangoldt(std::uint64_t n);          // log p if n = p^k, else 0
std::uint64_t prime_power_base(std::uint64_t n);  // p if n = p^k, else 0
double nearest_prime_power_distance(double t); // t > 2

// Linear sieve over [1, M] marking prime powers.
class LambdaSieve {
public:
    explicit LambdaSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    double lambda(std::uint32_t n) const { return n <= limit_ ? lambda_[n] : 0.0; }
    std::uint32_t base_prime(std::uint32_t n) const { return n <= limit_ ? prime_of_[n] : 0; }

    // psi(t) = sum_{n <= t} Lambda(n); right-continuous step function
    double psi(double t) const;

    // ascending prime powers in [2, limit]
    const std::vector<std::uint32_t>& prime_powers() const { return prime_powers_; }

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> prime_of_;
    std::vector<double> lambda_;
    std::vector<double> psi_prefix_;
    std::vector<std::uint32_t> prime_powers_;
};

// r_G(n) = sum_{m1+m2=n} Lambda(m1) Lambda(m2), ordered pairs
double goldbach_r(const LambdaSieve& sieve, std::uint32_t n);

struct GoldbachCounts {
    std::uint32_t limit = 0;
    std::vector<double> r;  // index n in [0, limit]
};

// all r_G(n), n <= N, by one convolution pass over prime-power pairs
GoldbachCounts goldbach_counts(const LambdaSieve& sieve, std::uint32_t N);

// sum_{n<=N} r_G(n) (N-n), direct double loop over prime powers
double cesaro_lhs(const LambdaSieve& sieve, std::uint32_t N);

// exact value of int_2^{u-2} psi(t) psi(u-t) dt at u = N, by walking the
// breakpoints of both step factors (prime powers and their reflections);
// equals cesaro_lhs(N) identically
double psi_convolution_oracle(const LambdaSieve& sieve, std::uint32_t N);

// log p at precision tier R for a prime power n (0 if n is not one);
// per-tier prime-log cache behind a mutex
template <class R> R lambda_log(std::uint64_t n) {
    const std::uint64_t p = prime_power_base(n);
    if (p == 0) return R(0);
    if constexpr (std::is_same_v<R, double>) {
        return std::log((double)p);
    } else {
        static std::map<std::uint64_t, R> cache;
        static std::mutex m;
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(p);
        if (it == cache.end()) {
            using std::log;
            it = cache.emplace(p, log(R(p))).first;
        }
        return it->second;
    }
}

} // namespace gbx
