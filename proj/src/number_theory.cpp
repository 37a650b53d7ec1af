#include "gbx/number_theory.hpp"

#include <algorithm>
#include <cmath>

namespace gbx {

std::uint64_t prime_power_base(std::uint64_t n) {
    if (n < 2) return 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint64_t m = n;
            while (m % p == 0) m /= p;
            return m == 1 ? p : 0;
        }
    }
    return n;  // prime
}

double von_mangoldt(std::uint64_t n) {
    const std::uint64_t p = prime_power_base(n);
    return p ? std::log((double)p) : 0.0;
}

double nearest_prime_power_distance(double t) {
    if (!(t > 2))
        throw domain_error("nearest_prime_power_distance: t must be > 2");
    const auto is_pp = [](std::uint64_t n) { return prime_power_base(n) != 0; };
    const std::uint64_t lo0 = (std::uint64_t)std::floor(t);
    std::uint64_t lo = lo0;
    while (lo >= 2 && !is_pp(lo)) --lo;
    std::uint64_t hi = lo0 + 1;
    while (!is_pp(hi)) ++hi;
    const double dlo = t - (double)lo;
    const double dhi = (double)hi - t;
    return std::min(dlo, dhi);
}

LambdaSieve::LambdaSieve(std::uint32_t limit) : limit_(std::max(limit, 4u)) {
    prime_of_.assign(limit_ + 1, 0);
    lambda_.assign(limit_ + 1, 0.0);
    std::vector<bool> composite(limit_ + 1, false);
    for (std::uint64_t p = 2; p <= limit_; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= limit_; q += p) composite[q] = true;
        const double lp = std::log((double)p);
        for (std::uint64_t q = p; q <= limit_; q *= p) {
            prime_of_[q] = (std::uint32_t)p;
            lambda_[q] = lp;
            if (q > limit_ / p) break;
        }
    }
    psi_prefix_.assign(limit_ + 1, 0.0);
    kahan_sum<double> acc;
    for (std::uint32_t n = 1; n <= limit_; ++n) {
        acc.add(lambda_[n]);
        psi_prefix_[n] = acc.value();
        if (prime_of_[n]) prime_powers_.push_back(n);
    }
}

double LambdaSieve::psi(double t) const {
    if (t < 2) return 0.0;
    if (t > (double)limit_)
        throw domain_error("LambdaSieve::psi: t beyond sieve limit");
    return psi_prefix_[(std::uint32_t)std::floor(t)];
}

double goldbach_r(const LambdaSieve& sieve, std::uint32_t n) {
    if (n < 4 || n > sieve.limit()) return 0.0;
    kahan_sum<double> acc;
    for (std::uint32_t m = 2; m + 2 <= n; ++m) {
        const double l1 = sieve.lambda(m);
        if (l1 == 0.0) continue;
        acc.add(l1 * sieve.lambda(n - m));
    }
    return acc.value();
}

GoldbachCounts goldbach_counts(const LambdaSieve& sieve, std::uint32_t N) {
    if (N > sieve.limit())
        throw domain_error("goldbach_counts: N beyond sieve limit");
    GoldbachCounts gc;
    gc.limit = N;
    gc.r.assign(N + 1, 0.0);
    const auto& pp = sieve.prime_powers();
    for (std::uint32_t q1 : pp) {
        if (q1 + 2 > N) break;
        const double l1 = sieve.lambda(q1);
        for (std::uint32_t q2 : pp) {
            if (q1 + q2 > N) break;
            gc.r[q1 + q2] += l1 * sieve.lambda(q2);
        }
    }
    return gc;
}

double cesaro_lhs(const LambdaSieve& sieve, std::uint32_t N) {
    if (N <= 4) return 0.0;
    if (N > sieve.limit())
        throw domain_error("cesaro_lhs: N beyond sieve limit");
    const auto& pp = sieve.prime_powers();
    kahan_sum<double> acc;
    for (std::uint32_t q1 : pp) {
        if (q1 + 2 > N) break;
        const double l1 = sieve.lambda(q1);
        for (std::uint32_t q2 : pp) {
            const std::uint64_t s = (std::uint64_t)q1 + q2;
            if (s > N) break;
            acc.add(l1 * sieve.lambda(q2) * (double)(N - s));
        }
    }
    return acc.value();
}

double psi_convolution_oracle(const LambdaSieve& sieve, std::uint32_t N) {
    if (N <= 4) return 0.0;
    if (N > sieve.limit())
        throw domain_error("psi_convolution_oracle: N beyond sieve limit");
    const double u = (double)N;
    // breakpoints of t -> psi(t)psi(u-t) on (2, u-2): prime powers q and
    // reflections u - q, plus the interval ends
    std::vector<double> bp{2.0, u - 2.0};
    for (std::uint32_t q : sieve.prime_powers()) {
        if (q <= 2 || (double)q >= u - 2) continue;
        bp.push_back((double)q);
        const double r = u - (double)q;
        if (r > 2.0 && r < u - 2.0) bp.push_back(r);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    kahan_sum<double> acc;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double a = bp[i], b = bp[i + 1];
        if (b <= a) continue;
        const double mid = a + (b - a) / 2;
        acc.add(sieve.psi(mid) * sieve.psi(u - mid) * (b - a));
    }
    return acc.value();
}

} // namespace gbx
