#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbx/theorem1.hpp"

#include <cmath>

using namespace gbx;
using doctest::Approx;

using R = real128;
using C = complex128;

static const ZeroTable& table() {
    static ZeroTable t = load_zeros_file(GBX_BUNDLED_ZEROS);
    return t;
}
static const LambdaSieve& sieve() {
    static LambdaSieve s(20000);
    return s;
}
static TruncationPolicy policy(int K, int bits = 128) {
    TruncationPolicy p;
    p.zero_count = K;
    p.quad_tolerance = 1e-12;
    p.precision = PrecisionContext::for_bits(bits);
    return p;
}

TEST_CASE("s tilde direct: dominated single term at z = 20") {
    R tb{};
    const C v = s_tilde_direct<R>(C(R(20), R(0)), sieve(), 200, 1e-30, &tb);
    // m = 2 dominates: log2 e^-40; next term log3 e^-60 ~ 1e-26
    using std::exp; using std::log;
    const R lead = log(R(2)) * exp(R(-40));
    CHECK(real_cast<double>((creal(v) - lead) / lead) == Approx(0.0).scale(1).epsilon(1e-8));
    CHECK(real_cast<double>(creal(v)) == Approx(2.9447286698096133e-18).epsilon(1e-8));
}

TEST_CASE("s tilde direct: frozen value at z = 1 and PNT scale at z = 0.1") {
    const C v1 = s_tilde_direct<R>(C(R(1), R(0)), sieve(), 200, 1e-40);
    CHECK(real_cast<double>(creal(v1)) == Approx(0.17423229951394595).epsilon(1e-12));
    const C v01 = s_tilde_direct<R>(C(R("0.1"), R(0)), sieve(), 1500, 1e-20);
    CHECK(real_cast<double>(creal(v01)) == Approx(8.3391920901066560).epsilon(1e-12));
    // S~(z) ~ e^{-2z}/z within 35% at z = 0.1
    const double v = real_cast<double>(creal(v01));
    CHECK(std::abs(v - std::exp(-0.2) / 0.1) / v <= 0.35);
}

TEST_CASE("s tilde direct: certified cutoff errors") {
    CHECK_THROWS_AS(s_tilde_direct<R>(C(R("0.01"), R(0)), sieve(), 100, 1e-10),
                    no_convergence);
    CHECK_THROWS_AS(s_tilde_direct<R>(C(R(-1), R(0)), sieve(), 100, 1e-10), domain_error);
    // the tail bound itself is honored: sum beyond M is below the bound
    const long M = 400;
    R tb{};
    const C head = s_tilde_direct<R>(C(R("0.05"), R(0)), sieve(), M, 1.0, &tb);
    const C full = s_tilde_direct<R>(C(R("0.05"), R(0)), sieve(), 3000, 1e-25);
    CHECK(real_cast<double>(cabs(C(full - head))) <= real_cast<double>(tb));
}

TEST_CASE("theorem 1: refinement ladder at the acceptance points") {
    for (const C z : {C(R("0.1"), R(0)), C(R("0.05"), R("0.3")), C(R("0.02"), R("-0.2"))}) {
        const auto trace =
            theorem1_refinement<R>(z, table(), policy(2000), {100, 500, 2000}, sieve());
        REQUIRE(trace.size() == 3);
        CHECK(real_cast<double>(trace[2].second) <= 0.5 * real_cast<double>(trace[0].second));
        for (std::size_t i = 1; i < trace.size(); ++i)
            CHECK(real_cast<double>(trace[i].second) <=
                  1.5 * real_cast<double>(trace[i - 1].second));
    }
}

TEST_CASE("theorem 1: frozen residual scale at z = 0.1") {
    const auto rep = theorem1_rhs<R>(C(R("0.1"), R(0)), table(), policy(100), sieve());
    CHECK(real_cast<double>(rep.residual) == Approx(1.5623067e-4).epsilon(1e-5));
}

TEST_CASE("theorem 1: reality for real z") {
    const auto rep = theorem1_rhs<R>(C(R("0.1"), R(0)), table(), policy(500), sieve());
    CHECK(real_cast<double>(cabs(C(C(R(0), cimag(rep.rhs_total))))) <=
          1e-10 * real_cast<double>(cabs(rep.rhs_total)));
    CHECK(cimag(rep.lhs_direct) == R(0));
}

TEST_CASE("theorem 1: conjugation is exact") {
    const C z(R("0.05"), R("0.3"));
    const auto r1 = theorem1_rhs<R>(z, table(), policy(200), sieve());
    const auto r2 = theorem1_rhs<R>(cconj(z), table(), policy(200), sieve());
    CHECK(creal(r1.rhs_total) == creal(r2.rhs_total));
    CHECK(cimag(r1.rhs_total) == -cimag(r2.rhs_total));
    for (std::size_t i = 0; i < r1.terms.size(); ++i) {
        CHECK(creal(r1.terms[i].second) == creal(r2.terms[i].second));
        CHECK(cimag(r1.terms[i].second) == -cimag(r2.terms[i].second));
    }
}

TEST_CASE("theorem 1: named terms sum to the total") {
    const auto rep = theorem1_rhs<R>(C(R("0.3"), R("0.1")), table(), policy(100), sieve());
    kahan_cplx_sum<R> s;
    for (const auto& [name, v] : rep.terms) s.add(v);
    CHECK(real_cast<double>(cabs(C(s.value_as<C>() - rep.rhs_total))) <=
          8 * real_cast<double>(std::numeric_limits<R>::epsilon() * cabs(rep.rhs_total)));
    CHECK_THROWS_AS(rep.term("nonsense"), domain_error);
}

TEST_CASE("Ei groups match their defining integrals") {
    // J1 = -(z/2) int_2^inf log(t-1) e^{-tz} dt   = (e^-z/2)(-i pi s + Ei(-z))
    // J2 = -(z/2) int_2^inf log(t+1) e^{-tz} dt
    // J3 =     z  int_2^inf log(t)   e^{-tz} dt
    const PrecisionContext ctx = PrecisionContext::for_bits(128);
    for (const C z : {C(R("0.3"), R(0)), C(R("0.2"), R("0.4"))}) {
        const auto rep = theorem1_rhs<R>(z, table(), policy(10), sieve());
        const R s = cimag(z) == R(0) ? R(0) : R(-1);  // sgn(Im(-z)), Im z > 0 here
        using std::exp; using std::log;
        const C ipis = C(R(0), pi_v<R>() * s);
        const C j1 = rep.term("eiJ1") + exp(-z) / R(2) * (-ipis);
        const C j2 = rep.term("eiJ2") + exp(z) / R(2) * (-ipis);
        const C j3 = rep.term("eiJ3") + ipis;
        const R T = R(240) / creal(z);  // e^{-T Re z} ~ 1e-104
        const int panels = quad::panels_for_phase(
            real_cast<double>(cimag(z) * T), 32);
        auto quad_of = [&](auto&& logfn, const R& coef) -> C {
            auto f = [&](const R& t) -> C {
                return C(logfn(t), R(0)) * exp(-t * z);
            };
            const C I = quad::refine_until(f, R(2), T, R(1e-16), panels, 16, 6);
            return coef * z * I;
        };
        const C q1 = quad_of([](const R& t) { using std::log; return log(t - 1); }, R(-0.5));
        const C q2 = quad_of([](const R& t) { using std::log; return log(t + 1); }, R(-0.5));
        const C q3 = quad_of([](const R& t) { using std::log; return log(t); }, R(1));
        CHECK(real_cast<double>(cabs(C(j1 - q1)) / cabs(q1)) < 1e-8);
        CHECK(real_cast<double>(cabs(C(j2 - q2)) / cabs(q2)) < 1e-8);
        CHECK(real_cast<double>(cabs(C(j3 - q3)) / cabs(q3)) < 1e-8);
    }
}

TEST_CASE("PNT limit: z * rhs -> 1 along real z -> 0+") {
    double prev = 1e9;
    for (const char* zs : {"0.05", "0.02", "0.01"}) {
        const C z(R(zs), R(0));
        const auto rep = theorem1_rhs<R>(z, table(), policy(500), sieve());
        const double gap = real_cast<double>(cabs(C(z * rep.rhs_total - C(R(1), R(0)))));
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("error regime check: converged grid has no flags") {
    TruncationPolicy pol = policy(500, 53);
    const std::vector<double> ys{0.0, 0.05, 0.1, 0.5, 1.0, 2.0};
    const auto rep = error_regime_check<double>({0.1}, ys, table(), pol, sieve());
    REQUIRE(rep.points.size() == ys.size());
    for (const auto& pt : rep.points) {
        CHECK(std::isfinite(pt.abs_e));
        CHECK(pt.converged);
        CHECK_FALSE(pt.flagged);
        CHECK(pt.ratio >= 0);
    }
    CHECK(rep.fitted_constant > 0);
    // regimes classified correctly
    CHECK(rep.points.front().regime == 1);
    CHECK(rep.points.back().regime == 3);
}

TEST_CASE("error regime check: |y| > 1 boundedness where the table resolves") {
    // at a = 0.1 the Gamma-sum converges well past y = 2 with 2000 zeros
    TruncationPolicy pol = policy(2000, 53);
    const auto rep =
        error_regime_check<double>({0.1}, {0.0, 0.1, 1.0, 2.0, 3.0}, table(), pol, sieve());
    double baseline = 0;
    for (const auto& pt : rep.points)
        if (pt.regime != 3) baseline = std::max(baseline, pt.ratio);
    for (const auto& pt : rep.points)
        if (pt.regime == 3) {
            CHECK(pt.converged);
            CHECK(pt.abs_e <= 10 * baseline);
        }
}
