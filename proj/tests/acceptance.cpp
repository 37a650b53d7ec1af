// acceptance.cpp
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// the measured numbers; the exit status is the number of failed criteria.
//
// Criterion 8 measures the error-term E(a,y) at a = 0.01 for y in
// {2, 10, 100}. With the bundled 2000-zero table the Gamma(rho) z^-rho
// series converges like e^{-gamma a/y}: at y = 10 it would need ~10^4
// ordinates and at y = 100 ~10^5, so the computed |E| there is dominated by
// truncation noise of the zero sum, not by E itself (the converged y = 2
// point sits well inside the bound). The criterion is evaluated exactly as
// specified and reports honestly; the per-point tail envelopes are printed
// alongside.

#include "gbx/closed_forms.hpp"
#include "gbx/number_theory.hpp"
#include "gbx/report.hpp"
#include "gbx/theorem1.hpp"
#include "gbx/theorem2.hpp"

#include <chrono>
#include <cstdio>

using namespace gbx;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int id, bool pass, const std::string& what, const std::string& detail,
            double secs) {
    std::printf("[%s] criterion %d: %s (%s) [%.1fs]\n", pass ? "PASS" : "FAIL", id,
                what.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

const ZeroTable& table() {
    static ZeroTable t = load_zeros_file(GBX_BUNDLED_ZEROS);
    return t;
}

// --- 1: special-function identity suite -----------------------------------

void criterion1() {
    Timer tm;
    using R = real256;
    using C = complex256;
    const PrecisionContext ctx = PrecisionContext::for_bits(256);
    bool ok = true;
    double worst_g1 = 0, worst_g2 = 0;
    const double re_list[] = {0.25, 0.5, 1.0, 2.0};
    const double im_list[] = {0.0, 5.0, -5.0, 14.13, -14.13, 50.0, -50.0};
    const std::pair<double, double> z_list[] = {{0.1, 0}, {1, 0}, {0.04, 0.2}, {2, -1}};
    for (double ra : re_list)
        for (double ia : im_list)
            for (auto [rz, iz] : z_list) {
                const C a{R(ra), R(ia)}, z{R(rz), R(iz)};
                const C up = upper_incomplete_gamma(a, z, ctx);
                const C lo = lower_incomplete_gamma(a, z, ctx);
                const C ga = gamma_fn(a);
                const double g1 =
                    real_cast<double>(cabs(C(up + lo - ga)) / cabs(ga));
                worst_g1 = std::max(worst_g1, g1);
                using std::exp; using std::log;
                const C up1 = upper_incomplete_gamma(a + C(R(1), R(0)), z, ctx);
                const C extra = exp(a * log(z) - z);
                const double g2 = real_cast<double>(
                    cabs(C(up1 - a * up - extra)) / (cabs(up1) + cabs(extra)));
                worst_g2 = std::max(worst_g2, g2);
            }
    ok = ok && worst_g1 <= 1e-12 && worst_g2 <= 1e-12;

    double worst_dilog = 0;
    for (double x = 0.04; x < 1.0; x += 0.04) {
        const double gap = std::abs(dilog(x) + dilog(1 - x) - M_PI * M_PI / 6 +
                                    std::log(x) * std::log(1 - x));
        worst_dilog = std::max(worst_dilog, gap);
    }
    ok = ok && worst_dilog <= 1e-12;

    double worst_beta = 0;
    {
        using R1 = real128;
        using C1 = complex128;
        const PrecisionContext c1 = PrecisionContext::for_bits(128);
        const R1 g1v("14.13472514173469");
        const R1 g2v("21.02203963877155");
        const C1 as[] = {C1(R1(0.75), R1(0)), C1(R1(1.5), g1v), C1(R1(2.5), R1(-5))};
        const C1 bs[] = {C1(R1(1.25), R1(0)), C1(R1(1.5), g2v), C1(R1(0.5), R1(3))};
        using std::exp;
        for (const C1& a : as)
            for (const C1& b : bs)
                for (double xv : {0.1, 0.3, 0.5, 0.7}) {
                    const C1 lhs = incomplete_beta(R1(xv), a, b, c1) +
                                   incomplete_beta(R1(1) - R1(xv), b, a, c1);
                    const C1 rhs = exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
                    worst_beta = std::max(
                        worst_beta,
                        real_cast<double>(cabs(C1(lhs - rhs)) / cabs(rhs)));
                }
    }
    ok = ok && worst_beta <= 1e-10;

    char d[160];
    std::snprintf(d, sizeof d, "G1 %.2e <= 1e-12, G2 %.2e <= 1e-12, dilog %.2e, beta %.2e",
                  worst_g1, worst_g2, worst_dilog, worst_beta);
    report(1, ok, "incomplete-gamma, dilog and beta identities", d, tm.s());
}

// --- 2: closed-form validation ---------------------------------------------

void criterion2() {
    Timer tm;
    TruncationPolicy pol;
    pol.zero_count = std::min<int>(2000, (int)table().size());
    pol.quad_tolerance = 1e-9;
    pol.precision = PrecisionContext::for_bits(128);
    const auto val = validate_closed_forms({10, 20, 50}, table(), 50, pol);
    double worst = 0;
    for (const auto& st : val.statuses) worst = std::max(worst, st.engine_rel_gap);
    int corrected = 0;
    for (const auto& st : val.statuses) corrected += st.corrected ? 1 : 0;
    char d[160];
    std::snprintf(d, sizeof d,
                  "%zu forms, max engine-vs-oracle gap %.2e <= 1e-6, %d reference "
                  "transcriptions corrected",
                  val.statuses.size(), worst, corrected);
    report(2, val.engine_ok, "closed forms match quadrature oracles at u = 10, 20, 50", d,
           tm.s());
}

// --- 3: exact left-hand-side identity --------------------------------------

void criterion3() {
    Timer tm;
    LambdaSieve sieve(600);
    double worst = 0;
    for (std::uint32_t N = 5; N <= 500; ++N) {
        const double lhs = cesaro_lhs(sieve, N);
        const double conv = psi_convolution_oracle(sieve, N);
        worst = std::max(worst, std::abs(conv - lhs) / std::max(1.0, lhs));
    }
    char d[96];
    std::snprintf(d, sizeof d, "max relative gap %.2e <= 1e-10 over N in [5,500]", worst);
    report(3, worst <= 1e-10, "cesaro sum equals the psi-convolution oracle", d, tm.s());
}

// --- 4: theorem 1 end-to-end refinement -------------------------------------

void criterion4() {
    Timer tm;
    using R = real128;
    using C = complex128;
    LambdaSieve sieve(8000);
    TruncationPolicy pol;
    pol.quad_tolerance = 1e-12;
    pol.precision = PrecisionContext::for_bits(128);
    bool ok = true;
    std::string detail;
    for (const C z : {C(R("0.1"), R(0)), C(R("0.05"), R("0.3")), C(R("0.02"), R("-0.2"))}) {
        pol.zero_count = 2000;
        const auto trace =
            theorem1_refinement<R>(z, table(), pol, {100, 500, 2000}, sieve);
        const double r0 = real_cast<double>(trace[0].second);
        const double r1 = real_cast<double>(trace[1].second);
        const double r2 = real_cast<double>(trace[2].second);
        const bool halved = r2 <= 0.5 * r0;
        const bool mono = r1 <= 1.5 * r0 && r2 <= 1.5 * r1;
        ok = ok && halved && mono;
        char b[96];
        std::snprintf(b, sizeof b, "%s%.3e->%.3e->%.3e", detail.empty() ? "" : "; ", r0, r1,
                      r2);
        detail += b;
    }
    report(4, ok, "prime-power series residual ladder K = 100/500/2000", detail, tm.s());
}

// --- 5: theorem 2 end-to-end refinement -------------------------------------

void criterion5() {
    Timer tm;
    LambdaSieve sieve(600);
    TruncationPolicy pol;
    pol.quad_tolerance = 1e-10;
    pol.precision = PrecisionContext::for_bits(53);
    bool ok = true;
    std::string detail;
    for (long N : {20L, 50L, 100L}) {
        const double lhs = cesaro_lhs(sieve, (std::uint32_t)N);
        double r[3];
        int i = 0;
        for (int K : {100, 500, 2000}) {
            pol.zero_count = K;
            const auto d = theorem2_rhs<double>(N, table(), pol);
            r[i++] = std::abs(lhs - d.rhs_total);
            const bool regroup =
                std::abs(d.s_total - d.rhs_total) <= 1e-12 * std::max(1.0, std::abs(d.rhs_total));
            ok = ok && regroup;
        }
        const bool halved = r[2] <= 0.5 * r[0];
        const bool mono = r[1] <= 1.5 * r[0] && r[2] <= 1.5 * r[1];
        ok = ok && halved && mono;
        char b[128];
        std::snprintf(b, sizeof b, "%sN=%ld: %.3e->%.3e->%.3e", detail.empty() ? "" : "; ", N,
                      r[0], r[1], r[2]);
        detail += b;
    }
    report(5, ok, "cesaro-goldbach residual ladder with K = 2000 double sums", detail,
           tm.s());
}

// --- 6: F(N) = O(N^2) --------------------------------------------------------

void criterion6() {
    Timer tm;
    TruncationPolicy pol;
    pol.zero_count = 2000;
    pol.quad_tolerance = 1e-10;
    pol.precision = PrecisionContext::for_bits(53);
    const auto rows = f_of_n_sweep<double>({50, 100, 500, 1000, 5000}, table(), pol);
    double at500 = 0, maxv = 0;
    bool decreasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].N == 500) at500 = std::abs(rows[i].f_over_n2);
        maxv = std::max(maxv, std::abs(rows[i].f_over_n2));
        if (i > 0)
            decreasing =
                decreasing && std::abs(rows[i].f_over_n3) < std::abs(rows[i - 1].f_over_n3);
    }
    const bool ok = maxv <= 2 * at500 && decreasing;
    char d[128];
    std::snprintf(d, sizeof d, "max |F|/N^2 = %.4f <= 2 x %.4f, |F|/N^3 strictly decreasing: %s",
                  maxv, at500, decreasing ? "yes" : "no");
    report(6, ok, "F(N) = O(N^2) over N = 50..5000", d, tm.s());
}

// --- 7: truncated explicit formula ------------------------------------------

void criterion7() {
    Timer tm;
    LambdaSieve sieve(1200);
    const double gK = table().ordinate(1999);
    bool ok = true;
    double worst_ratio = 0;
    for (double t : {50.5, 100.5, 500.5, 1000.5}) {
        const double resid = std::abs(truncated_psi(t, table(), 2000) - sieve.psi(t));
        const double l = std::log(t * gK);
        const double bound = 10.0 * t * l * l / gK;
        worst_ratio = std::max(worst_ratio, resid / bound);
        ok = ok && resid <= bound;
    }
    char d[96];
    std::snprintf(d, sizeof d, "max residual/bound = %.3f <= 1 with C = 10", worst_ratio);
    report(7, ok, "truncated explicit formula residuals at K = 2000", d, tm.s());
}

// --- 8: error-term regime improvement ----------------------------------------

void criterion8() {
    Timer tm;
    const double a = 0.01;
    TruncationPolicy pol;
    pol.zero_count = 2000;
    pol.quad_tolerance = 1e-10;
    pol.precision = PrecisionContext::for_bits(53);
    LambdaSieve sieve((std::uint32_t)choose_dirichlet_cutoff(a, 1e-12, 2000000));
    const std::vector<double> small_grid{0, a / 2, a, 2 * a, 5 * a, 0.05, 0.1, 0.2, 0.5, 1.0};
    const std::vector<double> big_grid{2, 10, 100};
    auto rep =
        error_regime_check<double>({a}, small_grid, table(), pol, sieve);
    double baseline = 0;
    for (const auto& pt : rep.points) baseline = std::max(baseline, pt.ratio);
    auto rep_big = error_regime_check<double>({a}, big_grid, table(), pol, sieve);
    double max_big = 0;
    bool ok = true;
    std::string detail;
    char b[128];
    std::snprintf(b, sizeof b, "baseline %.4f, threshold %.4f", baseline, 10 * baseline);
    detail += b;
    for (const auto& pt : rep_big.points) {
        max_big = std::max(max_big, pt.abs_e);
        std::snprintf(b, sizeof b, "; y=%g |E|=%.3f tail~%.1e%s", pt.y, pt.abs_e,
                      pt.zero_sum_tail, pt.converged ? "" : " (unresolved at K=2000)");
        detail += b;
        ok = ok && pt.abs_e <= 10 * baseline;
    }
    report(8, ok, "error term bounded for |y| > 1", detail, tm.s());
    if (!ok)
        std::printf("        note: the gamma zero sum converges like e^{-gamma a/|y|}; at "
                    "y = 10 and y = 100 the bundled 2000-zero table leaves truncation "
                    "noise larger than E itself (see the tail envelopes above), so this "
                    "criterion cannot be met with the shipped table; the converged y = 2 "
                    "point shows the claimed boundedness.\n");
}

} // namespace

int main() {
    std::printf("acceptance suite: explicit-formula verification engine\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures;
}
