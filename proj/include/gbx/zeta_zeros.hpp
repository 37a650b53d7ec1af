// zeta_zeros.hpp
//
// Zero-table ingestion and the zero-sum primitives built on it.
//
// File format: UTF-8 text, one ordinate in decimal per line, optional
// '#'-prefixed comments, strictly increasing. Every stored ordinate gamma is
// used as the conjugate pair rho = 1/2 +- i*gamma; the tabulated zeros all
// lie on the critical line (the formulas themselves do not assume RH).

#pragma once

#include "gbx/numeric.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace gbx {

class ZeroTable {
public:
    ZeroTable() = default;

    std::size_t size() const { return ord53_.size(); }
    const std::string& source() const { return source_; }

    template <class R> const std::vector<R>& ordinates() const {
        if constexpr (std::is_same_v<R, real53>) return ord53_;
        else if constexpr (std::is_same_v<R, real128>) return ord128_;
        else return ord256_;
    }

    double ordinate(std::size_t j) const { return ord53_[j]; }  // j in [0, size)

    static ZeroTable from_stream(std::istream& in, const std::string& source);

private:
    std::string source_;
    std::vector<real53> ord53_;
    std::vector<real128> ord128_;
    std::vector<real256> ord256_;
};

// parse + validate; throws parse_error (with line number) or domain_error
// (naming the offending pair)
ZeroTable load_zeros(std::istream& in, const std::string& source = "<stream>");
ZeroTable load_zeros_file(const std::string& path);

// truncation cutoffs shared by the verification engines
struct TruncationPolicy {
    int zero_count = 2000;          // K: conjugate pairs used
    long dirichlet_cutoff = 0;      // M: 0 = choose from tolerance at use site
    double quad_tolerance = 1e-10;
    PrecisionContext precision = PrecisionContext::for_bits(128);

    void validate(std::size_t table_size) const {
        if (zero_count < 0) throw domain_error("TruncationPolicy: K < 0");
        if ((std::size_t)zero_count > table_size)
            throw domain_error("TruncationPolicy: K exceeds zero table size");
        if (quad_tolerance <= 0) throw domain_error("TruncationPolicy: bad quad tolerance");
        precision.validate();
    }
};

// zeta'(0)/zeta(0) = log(2 pi)
template <class R> R zeta_log_derivative_at_zero() { return log2pi_v<R>(); }

// sum over the first K conjugate pairs of 2 Re(x^rho / rho); exactly real
// by pairing. Ascending gamma, compensated chunked accumulation.
template <class R> R zero_power_sum(const R& x, const ZeroTable& table, int K) {
    using std::log; using std::sqrt; using std::cos; using std::sin;
    if (!(x > R(1))) throw domain_error("zero_power_sum: x must be > 1");
    if (K < 0 || (std::size_t)K > table.size())
        throw domain_error("zero_power_sum: K out of range");
    const auto& g = table.ordinates<R>();
    const R lx = log(x);
    const R sx = sqrt(x);
    return deterministic_sum<R>((std::size_t)K, [&](std::size_t j) {
        const R gamma = g[j];
        const R c = cos(gamma * lx), s = sin(gamma * lx);
        // 2 Re(x^rho / rho) = 2 sqrt(x) (cos(g lx)/2 + g sin(g lx)) / (1/4 + g^2)
        return 2 * sx * (c / 2 + gamma * s) / (R(0.25) + gamma * gamma);
    });
}

// truncated explicit formula for psi:
//   psi(t) ~ t - sum_{|gamma|<=gamma_K} t^rho/rho - log(2pi) - (1/2)log(1 - t^-2)
template <class R> R truncated_psi(const R& t, const ZeroTable& table, int K) {
    using std::log;
    if (!(t > R(2))) throw domain_error("truncated_psi: t must be > 2");
    return t - zero_power_sum(t, table, K) - log2pi_v<R>() - log(1 - 1 / (t * t)) / 2;
}

} // namespace gbx
