// theorem1.hpp
//
// Both sides of the prime-power-series identity
//
//   S~(z) = sum_{m>=1} Lambda(m) e^{-mz}
//         = 2 e^{-2z} + e^{-2z}/z
//           - sum_rho z^-rho Gamma(rho)
//           + sum_rho ( z^-rho gamma(rho,2z) - 2^rho e^{-2z} / rho )
//           - log(2 pi) e^{-2z}
//           + (e^{-z}/2) ( -i pi s + Ei(-z) )
//           + (e^{ z}/2) ( -i pi s - log3 e^{-3z} + Ei(-3z) )
//           + i pi s + log2 e^{-2z} - Ei(-2z),        s = sgn(Im(-z)),
//
// plus the error-term regime check for
//   E(a,y) = S~ - ( e^{-2z}/z - sum Gamma(rho) z^-rho + sum compensated ).
//
// The compensator is 2^rho e^{-2z}/rho: the e^{-z} variant printed in one
// place upstream stalls the K-refinement (see CORRECTIONS.md).
//
// sgn(Im(-z)) is taken as 0 on the real axis; all Ei's of negative real
// arguments are then real principal values and the whole right side is real.
// Inputs with Im z < 0 are canonicalized through conjugation, which makes
// f(conj z) = conj f(z) exact at working precision.

#pragma once

#include "gbx/number_theory.hpp"
#include "gbx/special_functions.hpp"
#include "gbx/zeta_zeros.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gbx {

template <class R> struct Theorem1Report {
    using C = complex_t<R>;
    C z{};
    C lhs_direct{};
    C rhs_total{};
    std::vector<std::pair<std::string, C>> terms;  // ordered named map
    R residual{};
    R dirichlet_tail_bound{};
    long dirichlet_cutoff = 0;
    int zero_count = 0;

    C term(const std::string& name) const {
        for (const auto& [k, v] : terms)
            if (k == name) return v;
        throw domain_error("Theorem1Report: no term named " + name);
    }
};

// certified tail bound for sum_{m>M} Lambda(m) e^{-m a}; uses psi(t) < 1.04 t
template <class R> R dirichlet_tail_bound(long M, const R& a) {
    using std::exp;
    return R(2.08) * exp(-R(M) * a) * (R(M) + 1 / (2 * a));
}

// smallest ladder cutoff M (inclusive of the cap) with tail bound below tol
template <class R> long choose_dirichlet_cutoff(const R& re_z, double tol, long hard_cap = 2000000) {
    long M = 64;
    bool at_cap = false;
    while (true) {
        if (M >= hard_cap) {
            if (at_cap) break;
            M = hard_cap;
            at_cap = true;
        }
        if (real_cast<double>(dirichlet_tail_bound(M, re_z)) <= tol) return M;
        if (at_cap) break;
        M += M / 2;
    }
    throw no_convergence("sTildeDirect: no cutoff satisfies the tolerance (Re z too small?)");
}

// S~(z) truncated at M with certified tail bound; throws if the bound
// exceeds the policy tolerance (cutoff-too-small)
template <class R>
complex_t<R> s_tilde_direct(const complex_t<R>& z, const LambdaSieve& sieve, long M,
                            double tol, R* tail_bound_out = nullptr) {
    using C = complex_t<R>;
    if (!(creal(z) > R(0))) throw domain_error("sTildeDirect: Re(z) must be > 0");
    if ((std::uint64_t)M > sieve.limit())
        throw domain_error("sTildeDirect: sieve smaller than cutoff M");
    const R bound = dirichlet_tail_bound(M, creal(z));
    if (real_cast<double>(bound) > tol)
        throw no_convergence("sTildeDirect: cutoff M too small for tolerance");
    if (tail_bound_out) *tail_bound_out = bound;
    const auto& pp = sieve.prime_powers();
    kahan_cplx_sum<R> acc;
    for (std::uint32_t q : pp) {
        if ((long)q > M) break;
        const R lam = lambda_log<R>(q);
        acc.add(exp_of<R>(-R(q) * creal(z), -R(q) * cimag(z)) * lam);
    }
    return acc.template value_as<C>();
}

namespace detail {

// log Gamma(rho_j) for the first K table zeros at tier R, cached per table
// identity is not attempted; recompute per call site when needed.
template <class R>
std::vector<complex_t<R>> log_gamma_on_zeros(const ZeroTable& table, int K) {
    using C = complex_t<R>;
    const auto& g = table.ordinates<R>();
    std::vector<C> lg(K);
    for (int j = 0; j < K; ++j) lg[j] = log_gamma(C(R(0.5), g[j]));
    return lg;
}

} // namespace detail

template <class R>
Theorem1Report<R> theorem1_rhs(const complex_t<R>& z, const ZeroTable& table,
                               const TruncationPolicy& policy, const LambdaSieve& sieve) {
    using C = complex_t<R>;
    using std::exp; using std::log;
    policy.validate(table.size());
    if (!(creal(z) > R(0))) throw domain_error("theorem1Rhs: Re(z) must be > 0");

    if (cimag(z) < R(0)) {
        // conjugation canonicalization: evaluate in the upper half plane
        Theorem1Report<R> rep = theorem1_rhs<R>(cconj(z), table, policy, sieve);
        rep.z = cconj(rep.z);
        rep.lhs_direct = cconj(rep.lhs_direct);
        rep.rhs_total = cconj(rep.rhs_total);
        for (auto& [k, v] : rep.terms) v = cconj(v);
        return rep;
    }

    const PrecisionContext& ctx = policy.precision;
    const int K = policy.zero_count;
    const bool real_z = (cimag(z) == R(0));
    const auto& g = table.ordinates<R>();

    Theorem1Report<R> rep;
    rep.z = z;
    rep.zero_count = K;

    const C e2z = exp(R(-2) * z);
    const C main_term = R(2) * e2z + e2z / z;

    const auto lg = detail::log_gamma_on_zeros<R>(table, K);

    // -sum_rho Gamma(rho) z^-rho over conjugate pairs
    const C logz = log(z);
    kahan_cplx_sum<R> gamma_acc, comp_acc;
    auto add_pair = [&](kahan_cplx_sum<R>& acc, const C& upper, const C& lower) {
        acc.add(upper);
        acc.add(lower);
    };
    for (std::size_t base = 0; base < (std::size_t)K; base += kDeterministicChunk) {
        const std::size_t end = std::min((std::size_t)K, base + kDeterministicChunk);
        kahan_cplx_sum<R> gchunk, cchunk;
        for (std::size_t j = base; j < end; ++j) {
            const C rho(R(0.5), g[j]);
            const C up = -exp(lg[j] - rho * logz);
            if (real_z) {
                gchunk.add(C(2 * creal(up), R(0)));
                const C cu = compensated_gamma_term(rho, z, ctx);
                cchunk.add(C(2 * creal(cu), R(0)));
            } else {
                const C rhob = cconj(rho);
                add_pair(gchunk, up, -exp(cconj(lg[j]) - rhob * logz));
                add_pair(cchunk, compensated_gamma_term(rho, z, ctx),
                         compensated_gamma_term(rhob, z, ctx));
            }
        }
        gamma_acc.add(gchunk.template value_as<C>());
        comp_acc.add(cchunk.template value_as<C>());
    }
    const C gamma_zero_sum = gamma_acc.template value_as<C>();
    const C comp_zero_sum = comp_acc.template value_as<C>();

    const C zeta_const = -log2pi_v<R>() * e2z;

    // Ei groups; s = sgn(Im(-z)) = -sgn(Im z), 0 on the real axis
    const R s = real_z ? R(0) : R(-1);  // canonicalized: Im z > 0 here
    const C emz = exp(-z), epz = exp(z);
    const C ei_m1 = exp_integral_ei(C(-creal(z), -cimag(z)), ctx);
    const C ei_m2 = exp_integral_ei(C(-2 * creal(z), -2 * cimag(z)), ctx);
    const C ei_m3 = exp_integral_ei(C(-3 * creal(z), -3 * cimag(z)), ctx);
    const C j1 = emz / R(2) * ei_m1;
    const C j2 = epz / R(2) * (-log(R(3)) * exp(R(-3) * z) + ei_m3);
    const C j3 = log(R(2)) * e2z - ei_m2;
    // -i pi s (e^-z + e^z)/2 + i pi s  =  i pi s (1 - cosh z)
    const C sgn_terms = real_z ? C(R(0), R(0))
                               : C(R(0), pi_v<R>() * s) * (C(R(1), R(0)) - (emz + epz) / R(2));

    rep.terms = {
        {"mainTerm", main_term},
        {"gammaZeroSum", gamma_zero_sum},
        {"compensatedZeroSum", comp_zero_sum},
        {"zetaConstTerm", zeta_const},
        {"eiJ1", j1},
        {"eiJ2", j2},
        {"eiJ3", j3},
        {"sgnTerms", sgn_terms},
    };
    kahan_cplx_sum<R> tot;
    for (const auto& [k, v] : rep.terms) tot.add(v);
    rep.rhs_total = tot.template value_as<C>();

    const double tol = std::min(policy.quad_tolerance, 1e-3) * 1e-2;
    rep.dirichlet_cutoff = policy.dirichlet_cutoff > 0
                               ? policy.dirichlet_cutoff
                               : choose_dirichlet_cutoff(creal(z), tol, (long)sieve.limit());
    R tb{};
    rep.lhs_direct = s_tilde_direct<R>(z, sieve, rep.dirichlet_cutoff, tol, &tb);
    rep.dirichlet_tail_bound = tb;
    rep.residual = cabs(C(rep.lhs_direct - rep.rhs_total));
    return rep;
}

// residual versus K over a truncation ladder
template <class R>
std::vector<std::pair<int, R>> theorem1_refinement(const complex_t<R>& z, const ZeroTable& table,
                                                   TruncationPolicy policy,
                                                   const std::vector<int>& ladder,
                                                   const LambdaSieve& sieve) {
    std::vector<std::pair<int, R>> out;
    for (int K : ladder) {
        policy.zero_count = K;
        out.emplace_back(K, theorem1_rhs<R>(z, table, policy, sieve).residual);
    }
    return out;
}

// ---------------------------------------------------------------------------
// error-term regime check
//
//   E(a,y) = S~ - e^{-2z}/z - sum_rho [combined term],
//   combined = -z^-rho Gamma(rho) + (z^-rho gamma(rho,2z) - 2^rho e^{-2z}/rho),
//
// summed per zero (never as two separate large partial sums). Regimes:
//   1: |y| <= a       bound 1 + |z|^(1/2)
//   2: a < |y| <= 1   bound 1 + |z|^(1/2) (1 + log^2(|y|/a))
//   3: |y| > 1        bound 1
//
// The Gamma(rho) z^-rho series converges like e^{-gamma atan(a/|y|)}, so for
// |y| >> a the truncated E carries a tail of the same size; zero_sum_tail
// estimates it so reports can flag points the table cannot resolve.

template <class R> struct RegimePoint {
    R a{}, y{};
    R abs_e{};
    R bound{};
    R ratio{};
    R zero_sum_tail{};  // envelope estimate of the truncated Gamma-sum tail
    int regime = 0;
    bool converged = true;  // tail envelope small against |E| and the bound
    bool flagged = false;
};

template <class R> struct RegimeReport {
    std::vector<RegimePoint<R>> points;
    R fitted_constant{};  // max ratio over regimes 1-2
    R slack = R(10);
    bool any_flagged = false;
};

template <class R>
R zero_sum_tail_envelope(const R& a, const R& y, const ZeroTable& table, int K) {
    using std::atan; using std::abs; using std::exp; using std::sqrt; using std::log;
    if (K == 0 || (std::size_t)K > table.size()) return R(0);
    const R gK = table.ordinates<R>()[K - 1];
    const R theta = atan(a / (abs(y) + std::numeric_limits<R>::min()));
    const R az = sqrt(a * a + y * y);
    // sum_{j>K} sqrt(2 pi / |z|) e^{-gamma theta}, zero density log(g/2pi)/2pi
    const R dens = log(gK / (2 * pi_v<R>())) / (2 * pi_v<R>());
    return sqrt(2 * pi_v<R>() / az) * dens * exp(-gK * theta) / theta;
}

template <class R>
RegimeReport<R> error_regime_check(const std::vector<R>& a_grid, const std::vector<R>& y_grid,
                                   const ZeroTable& table, const TruncationPolicy& policy,
                                   const LambdaSieve& sieve) {
    using C = complex_t<R>;
    using std::exp; using std::log; using std::sqrt; using std::abs;
    policy.validate(table.size());
    const PrecisionContext& ctx = policy.precision;
    const int K = policy.zero_count;
    const auto& g = table.ordinates<R>();

    RegimeReport<R> rep;
    for (const R& a : a_grid) {
        if (!(a > R(0))) throw domain_error("regime check: a must be > 0");
        const auto lg = detail::log_gamma_on_zeros<R>(table, K);
        for (const R& y : y_grid) {
            const C z(a, y);
            kahan_cplx_sum<R> acc;
            for (std::size_t base = 0; base < (std::size_t)K; base += kDeterministicChunk) {
                const std::size_t end = std::min((std::size_t)K, base + kDeterministicChunk);
                kahan_cplx_sum<R> chunk;
                for (std::size_t j = base; j < end; ++j) {
                    const C rho(R(0.5), g[j]);
                    chunk.add(combined_zero_term(rho, z, lg[j], ctx));
                    const C rhob = cconj(rho);
                    chunk.add(combined_zero_term(rhob, z, cconj(lg[j]), ctx));
                }
                acc.add(chunk.template value_as<C>());
            }
            const double tol = 1e-12;
            const long M = choose_dirichlet_cutoff(a, tol, (long)sieve.limit());
            const C sd = s_tilde_direct<R>(z, sieve, M, tol);
            const C e = sd - exp(R(-2) * z) / z - acc.template value_as<C>();

            RegimePoint<R> pt;
            pt.a = a;
            pt.y = y;
            pt.abs_e = cabs(e);
            const R az = sqrt(a * a + y * y);
            const R ay = abs(y);
            if (ay <= a) {
                pt.regime = 1;
                pt.bound = 1 + sqrt(az);
            } else if (ay <= R(1)) {
                pt.regime = 2;
                const R l = log(ay / a);
                pt.bound = 1 + sqrt(az) * (1 + l * l);
            } else {
                pt.regime = 3;
                pt.bound = R(1);
            }
            pt.ratio = pt.abs_e / pt.bound;
            pt.zero_sum_tail = zero_sum_tail_envelope(a, y, table, K);
            rep.points.push_back(pt);
        }
    }
    for (auto& pt : rep.points) {
        using std::max;
        pt.converged = pt.zero_sum_tail <= max(pt.bound, pt.abs_e) / 4;
        if (pt.regime != 3 && pt.converged && pt.ratio > rep.fitted_constant)
            rep.fitted_constant = pt.ratio;
    }
    for (auto& pt : rep.points) {
        // points the zero table cannot resolve are reported, not flagged
        pt.flagged = pt.converged && pt.ratio > rep.slack * rep.fitted_constant;
        rep.any_flagged = rep.any_flagged || pt.flagged;
    }
    return rep;
}

} // namespace gbx
