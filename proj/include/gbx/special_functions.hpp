// special_functions.hpp
//
// Complex-argument special functions needed by both verification engines:
// principal log-gamma, upper/lower incomplete gamma, the compensated
// zero-sum term, the exponential integral Ei, the real dilogarithm, and the
// incomplete beta function (including second parameter zero).
//
// Algorithm selection follows the usual stability regions:
//   gamma(a,z):  Kummer series for |z| <= max(1, |a|), Legendre continued
//                fraction for Gamma(a,z) otherwise.
//   compensated term:  the n>=1 Kummer tail of z^-rho gamma(rho,2z) when
//                |2z| <= 0.8 |rho| (its terms then decrease from the start,
//                so the small difference is never formed by subtraction);
//                otherwise the continued-fraction route through
//                Gamma(rho+1, 2z), composed in log space.
//   Ei:          power series gamma_E + log z + sum z^n/(n n!), evaluated one
//                precision tier up to absorb the alternating-series loss for
//                Re z < 0; optimally truncated asymptotic series for large |z|.
//
// Every function canonicalizes Im < 0 inputs through conjugation, so
// f(conj args) == conj(f(args)) holds bit-for-bit.
//
// Gamma factors are only ever exposed in log form or as fused exponents;
// nothing here evaluates Gamma(rho) for gamma ~ 2000 as a raw value.

#pragma once

#include "gbx/numeric.hpp"
#include "gbx/quadrature.hpp"

#include <array>

namespace gbx {

namespace detail {

// B_{2k} / (2k (2k-1)), k = 1..60: Stirling series coefficients.
inline const char* const kStirlingCoeff[60] = {
    "0.08333333333333333333333333333333333333333333333333333333333333333333333333333333333",
    "-0.002777777777777777777777777777777777777777777777777777777777777777777777777777777778",
    "0.0007936507936507936507936507936507936507936507936507936507936507936507936507936507937",
    "-0.0005952380952380952380952380952380952380952380952380952380952380952380952380952380952",
    "0.0008417508417508417508417508417508417508417508417508417508417508417508417508417508418",
    "-0.001917526917526917526917526917526917526917526917526917526917526917526917526917526918",
    "0.00641025641025641025641025641025641025641025641025641025641025641025641025641025641",
    "-0.02955065359477124183006535947712418300653594771241830065359477124183006535947712418",
    "0.1796443723688305731649384900158893966944259852242473548813806302386509029611457176",
    "-1.392432216905901116427432216905901116427432216905901116427432216905901116427432217",
    "13.40286404416839199447895100069013112491212891400329974064551496362101128891156452",
    "-156.8482846260020173063651324520889738411169336242247926322868216908686193983479586",
    "2193.103333333333333333333333333333333333333333333333333333333333333333333333333333",
    "-36108.77125372498935905753028547901632098756613287772470883708689543690712826472496",
    "691472.2688513130671083952155235640182587834624186929757571901113049659418932937348",
    "-15238221.53940741619228336659624034922288862219361039027966154204847184402384864431",
    "382900751.3914514109234490684208402540136919919426546613717907378991483636342294811",
    "-10882266035.78439843817135339369731193099021063227429400344836187559224926433866676",
    "347320283765.0022186257377030444474219597447265340764473750982086165860129687650166",
    "-12369602142269.2744463508996924444949400505592107650991426863047043386968202762633",
    "488788064793079.3355894926747422502989227589620870110902341283084199767051491661341",
    "-21320333960919373.89934837362611375476483042622588907112585918219863958066383559889",
    "1021775296525700077.565287628053585674940430209101494619874566556436127215840951148",
    "-53575472173300203609.79407969958803876231725958713460939078123137621168278042249656",
    "3061578263704883415043.151049539153862524089537735570221735230569598065691769886059",
    "-190499763896157962224166.8276390146371623516716687846401539608993069134343913994499",
    "12876026003505199431411044.21140179554243852373913681656319654228816566758355243129",
    "-942822816935269786950447002.0875691970631463958724118925404673188095535567221125434",
    "74616253909129219118025111388.6144877185026127395191704842034721318868089801861807",
    "-6367824763636919710729054237460.927683900851132385099896870425877537377061026721164",
    "585220265107508820734229817029.3526311194700786010153068408632899786851132332302284e+3",
    "-57760996479167661344985541268274.94526577344817199387317176119073510792547851246262e+4",
    "6122893591948069625313711258811060.812951967582573733112943222530786241900963248807e+3",
    "-69541419434768128651915116979732959.88583530467691002626392237527722339701870727898e+4",
    "8453982377209665176126873532017629292.394538837436674537325153655742329363018672370e+3",
    "-1097860686209437092026830533474728478.665867053103422498242303648594910345601510801e+6",
    "152109606837908128816350147483698407913.4996594687816789834887008173242158025613429e+4",
    "-224557366788350379803392852564737637969.6642182628429030067886869203069334556292218e+6",
    "352584289923902028019808813975110536035.4071806681583983700624361823636242285717426e+8",
    "-588317208816035327792082127465213634576.091406431114970662072104243324985346304461e+10",
    "104156312202209411474799182002850697972.2558648336816073969191091824055644452745842e+13",
    "-195434766140119458738047254876666610107.9139715953171402795713016323590870796127226e+15",
    "388166694800628707026717825125447054382.8789280750447858719679415201550544800847464e+17",
    "-815003359112706399601201018088411382782.8986873365388632065586946523504663523875371e+19",
    "180730865165888800948014030028114752521.7258639556092444983256328777309767299202974e+22",
    "-422913873961059274538798327529331258102.5180453288927649267007593598579862531756792e+24",
    "104317158648413960121929831804909126646.307965484117722981402522151182771087929872e+27",
    "-271085179013525304959760191931412124055.6627328165518032444576843852830132959356629e+29",
    "741273157595386684165933336160104479827.3632935458518713730541726645335980521210512e+31",
    "-213020107109660554629977876662093150419.1560994261877124157383826110006987200026375e+34",
    "642784443083413887060961029832128660841.0576285484602467466131171684994563359600447e+36",
    "-203405255443404385400439485712450880836.8391382001780510918302518393537873877505328e+39",
    "674594723961853249674758022777918117116.6537811637442768389011646379875495033431845e+41",
    "-234245540973440664184254660523278339237.4637584946178457928724140095223990965840826e+44",
    "850963418462675242687026209204658951996.8828115210742776493810914574054394388416123e+46",
    "-323228102931742397233164835218504298599.2981463229287746765578086420003174814714964e+49",
    "128226917377706327861102333354508093438.4959043517813243100283512466917065026133033e+52",
    "-530901103903706680021446674992772473050.0604132100249418975457626357129195079459595e+54",
    "229265141854969062805307960170105467873.0191124049138171587977298394031167585455206e+57",
    "-103188921330876343443234131407868074774.9623875117772060257119270379843418141715204e+59",
};

template <class R> const std::vector<R>& stirling_coeff() {
    static const std::vector<R> table = [] {
        std::vector<R> t;
        t.reserve(60);
        for (const char* s : kStirlingCoeff) t.push_back(real_from_string<R>(s));
        return t;
    }();
    return table;
}

template <class R> R stirling_radius() {
    const int d = working_digits10<R>();
    if (d <= 17) return R(10);
    if (d <= 45) return R(17);
    return R(33);
}

// Stirling series at |w| >= stirling_radius, Re w > 0.
template <class C> C log_gamma_stirling(const C& w) {
    using R = real_t<C>;
    using std::log;
    const auto& coef = stirling_coeff<R>();
    const C lw = log(w);
    C acc = (w - C(R(0.5), R(0))) * lw - w + C(log2pi_v<R>() / 2, R(0));
    const C w2 = w * w;
    C pw = w;  // w^(2k-1)
    const R eps = std::numeric_limits<R>::epsilon();
    R prev = std::numeric_limits<R>::max();
    for (std::size_t k = 0; k < coef.size(); ++k) {
        const C term = coef[k] / pw;
        const R mag = cabs(term);
        if (mag >= prev) break;  // asymptotic tail started growing
        acc += term;
        if (mag <= eps * cabs(acc)) break;
        prev = mag;
        pw = pw * w2;
    }
    return acc;
}

template <class C> C log_sin_pi(const C& a) {
    using R = real_t<C>;
    using std::log; using std::sin;
    const C w = pi_v<R>() * a;
    const R y = cimag(w);
    if (y <= R(20)) return log(sin(w));
    // sin w ~ (1/2) e^{-iw + i pi/2} for Im w large
    const C miw(cimag(w), -creal(w));  // -i w
    using std::exp;
    const C corr = log(C(R(1), R(0)) - exp(C(-2 * cimag(w), 2 * creal(w))));
    return miw + C(-ln2_v<R>(), pi_v<R>() / 2) + corr;
}

} // namespace detail

// ---------------------------------------------------------------------------
// principal branch of log Gamma(a); exp of it recovers Gamma(a).
// Branch fidelity off the right half-plane is limited to what the
// reflection formula provides (see Non-goals in the docs).

template <class C> C log_gamma(const C& a) {
    using R = real_t<C>;
    using std::floor; using std::log;
    if (cimag(a) < R(0)) return cconj(log_gamma(cconj(a)));
    if (cimag(a) == R(0) && creal(a) <= R(0) && creal(a) == floor(creal(a)))
        throw domain_error("log_gamma: pole at non-positive integer");
    if (creal(a) < R(0.5)) {
        // reflection
        const C one_minus(R(1) - creal(a), -cimag(a));
        return C(log(pi_v<R>()), R(0)) - detail::log_sin_pi(a) - log_gamma(one_minus);
    }
    const R radius = detail::stirling_radius<R>();
    C w = a;
    C shift_logs(R(0), R(0));
    int shifts = 0;
    while (cabs(w) < radius) {
        shift_logs += log(w);
        w += C(R(1), R(0));
        if (++shifts > 80) throw no_convergence("log_gamma: shift runaway");
    }
    return detail::log_gamma_stirling(w) - shift_logs;
}

template <class C> C gamma_fn(const C& a) {
    using std::exp;
    return exp(log_gamma(a));
}

// ---------------------------------------------------------------------------
// incomplete gamma

namespace detail {

// gamma(a,z) = z^a e^{-z} sum_{n>=0} z^n / (a (a+1) ... (a+n)); Re(a) > 0.
template <class C> C lower_gamma_kummer(const C& a, const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    using std::exp; using std::log;
    const R tol = real_cast<R>(ctx.series_tolerance);
    C term = C(R(1), R(0)) / a;
    kahan_cplx_sum<R> acc;
    acc.add(term);
    for (long n = 1; n <= ctx.max_series_terms; ++n) {
        term = term * z / (a + C(R(n), R(0)));
        acc.add(term);
        const C s = acc.template value_as<C>();
        if (cabs(term) <= tol * cabs(s) && n > 4)
            return exp(a * log(z) - z) * s;
    }
    throw no_convergence("lower_incomplete_gamma: Kummer series budget exhausted");
}

// F with Gamma(a,z) = e^{-z} z^a F(a,z)  (Legendre continued fraction,
// modified Lentz). Needs z away from the negative real axis.
template <class C> C upper_gamma_cf_factor(const C& a, const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    const R tol = real_cast<R>(ctx.series_tolerance);
    const R tiny = std::numeric_limits<R>::min() * R(1e10);
    C b = z + C(R(1), R(0)) - a;
    if (cabs(b) == R(0)) b = C(tiny, R(0));
    C f = b, Cc = f, D = C(R(0), R(0));
    for (long j = 1; j <= ctx.max_series_terms; ++j) {
        const C aj = -R(j) * (C(R(j), R(0)) - a);
        b += C(R(2), R(0));
        D = b + aj * D;
        if (cabs(D) == R(0)) D = C(tiny, R(0));
        Cc = b + aj / Cc;
        if (cabs(Cc) == R(0)) Cc = C(tiny, R(0));
        D = C(R(1), R(0)) / D;
        const C delta = Cc * D;
        f = f * delta;
        using std::abs;
        if (cabs(delta - C(R(1), R(0))) <= tol && j > 4) return C(R(1), R(0)) / f;
    }
    throw no_convergence("upper_incomplete_gamma: continued fraction budget exhausted");
}

} // namespace detail

// gamma(a,z): the defining integral along the straight path 0 -> z; Re(a) > 0.
template <class C> C lower_incomplete_gamma(const C& a, const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    using std::exp; using std::log; using std::max;
    if (!(creal(a) > R(0)))
        throw domain_error("lower_incomplete_gamma: Re(a) must be > 0");
    if (cimag(a) < R(0) || (cimag(a) == R(0) && cimag(z) < R(0)))
        return cconj(lower_incomplete_gamma(cconj(a), cconj(z), ctx));
    if (cabs(z) == R(0)) return C(R(0), R(0));
    const R crossover = max(R(1), cabs(a));
    if (cabs(z) <= crossover || creal(z) <= R(0))
        return detail::lower_gamma_kummer(a, z, ctx);
    const C F = detail::upper_gamma_cf_factor(a, z, ctx);
    return gamma_fn(a) - exp(a * log(z) - z) * F;
}

// Gamma(a,z): satisfies Gamma(a,z) + gamma(a,z) = Gamma(a).
template <class C> C upper_incomplete_gamma(const C& a, const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    using std::exp; using std::log; using std::max;
    if (cimag(a) < R(0) || (cimag(a) == R(0) && cimag(z) < R(0)))
        return cconj(upper_incomplete_gamma(cconj(a), cconj(z), ctx));
    if (cabs(z) == R(0)) return gamma_fn(a);
    const R crossover = max(R(1), cabs(a));
    if (cabs(z) > crossover && creal(z) > R(0)) {
        const C F = detail::upper_gamma_cf_factor(a, z, ctx);
        return exp(a * log(z) - z) * F;
    }
    if (!(creal(a) > R(0))) {
        if (creal(z) > R(0))
            return exp(a * log(z) - z) * detail::upper_gamma_cf_factor(a, z, ctx);
        throw domain_error("upper_incomplete_gamma: need Re(a) > 0 or Re(z) > 0");
    }
    return gamma_fn(a) - detail::lower_gamma_kummer(a, z, ctx);
}

// ---------------------------------------------------------------------------
// compensated zero-sum term  z^-rho gamma(rho,2z) - 2^rho e^{-2z} / rho.
//
// Small |z|: cancellation-free Kummer tail
//   2^rho e^{-2z} sum_{n>=1} (2z)^n / (rho (rho+1) ... (rho+n)),
// whose terms decrease from n = 1 when |2z| <= 0.8 |rho|.
// Large |z|: recover it from the stable combined term
//   -(1/rho) z^-rho Gamma(rho+1, 2z)  (continued fraction, fused exponents).

namespace detail {

template <class C> C kummer_tail(const C& rho, const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    const R tol = real_cast<R>(ctx.series_tolerance);
    const C two_z = R(2) * z;
    C term = two_z / (rho * (rho + C(R(1), R(0))));
    kahan_cplx_sum<R> acc;
    acc.add(term);
    for (long n = 1; n <= ctx.max_series_terms; ++n) {
        term = term * two_z / (rho + C(R(n + 1), R(0)));
        acc.add(term);
        const C s = acc.template value_as<C>();
        if (cabs(term) <= tol * (cabs(s) + tol) && n > 4) {
            const C pref = exp_of<R>(creal(rho) * ln2_v<R>() - R(2) * creal(z),
                                     cimag(rho) * ln2_v<R>() - R(2) * cimag(z));
            return pref * s;
        }
    }
    throw no_convergence("compensated_gamma_term: Kummer tail budget exhausted");
}

// -(1/rho) z^-rho Gamma(rho+1, 2z) = -(2z) 2^rho e^{-2z} F(rho+1, 2z) / rho
template <class C> C combined_term_cf(const C& rho, const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    const C two_z = R(2) * z;
    const C F = upper_gamma_cf_factor(rho + C(R(1), R(0)), two_z, ctx);
    const C pref = exp_of<R>(creal(rho) * ln2_v<R>() - R(2) * creal(z),
                             cimag(rho) * ln2_v<R>() - R(2) * cimag(z));
    return -(two_z) * pref * F / rho;
}

} // namespace detail

template <class C> C compensated_gamma_term(const C& rho, const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    using std::exp; using std::log;
    if (!(creal(z) > R(0)))
        throw domain_error("compensated_gamma_term: Re(z) must be > 0");
    if (!(creal(rho) > R(0) && creal(rho) < R(1)))
        throw domain_error("compensated_gamma_term: Re(rho) must lie in (0,1)");
    if (cimag(rho) < R(0) || (cimag(rho) == R(0) && cimag(z) < R(0)))
        return cconj(compensated_gamma_term(cconj(rho), cconj(z), ctx));
    if (cabs(z) == R(0)) return C(R(0), R(0));
    if (R(2) * cabs(z) <= R(0.8) * cabs(rho))
        return detail::kummer_tail(rho, z, ctx);
    // compensated = combined + z^-rho Gamma(rho), both stable here
    const C big = exp(log_gamma(rho) - rho * log(z));
    return detail::combined_term_cf(rho, z, ctx) + big;
}

// The per-zero combined term of the explicit formula,
//   -z^-rho Gamma(rho) + compensated(rho, z) = -(1/rho) z^-rho Gamma(rho+1, 2z),
// computed by whichever route is stable; lg_rho = log_gamma(rho) precomputed.
template <class C> C combined_zero_term(const C& rho, const C& z, const C& lg_rho,
                                        const PrecisionContext& ctx) {
    using R = real_t<C>;
    using std::exp; using std::log;
    if (R(2) * cabs(z) <= R(0.8) * cabs(rho))
        return -exp(lg_rho - rho * log(z)) + detail::kummer_tail(rho, z, ctx);
    return detail::combined_term_cf(rho, z, ctx);
}

// ---------------------------------------------------------------------------
// exponential integral Ei(z) = -int_{-z}^infty e^-t / t dt, |arg z| < pi;
// on the negative real axis: the real principal value.

namespace detail {

template <class C> C ei_series(const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    using std::log;
    const R tol = real_cast<R>(std::min(ctx.series_tolerance,
                                        (double)std::numeric_limits<real_t<C>>::epsilon() * 4));
    C t(R(1), R(0));
    kahan_cplx_sum<R> acc;
    long n = 1;
    for (; n <= ctx.max_series_terms; ++n) {
        t = t * z / C(R(n), R(0));
        const C term = t / C(R(n), R(0));
        acc.add(term);
        if (cabs(term) <= tol * (cabs(acc.template value_as<C>()) + R(1)) && n > 6) break;
    }
    if (n > ctx.max_series_terms) throw no_convergence("Ei: series budget exhausted");
    C logpart;
    if (cimag(z) == R(0)) {
        using std::abs;
        logpart = C(log(abs(creal(z))), R(0));  // principal value on the real axis
    } else {
        logpart = log(z);
    }
    return C(euler_v<R>(), R(0)) + logpart + acc.template value_as<C>();
}

template <class C> C ei_asymptotic(const C& z) {
    using R = real_t<C>;
    using std::exp;
    // Ei(w) ~ i pi sgn(Im w) + (e^w / w) sum_k k! / w^k, optimally truncated
    C term(R(1), R(0));
    kahan_cplx_sum<R> acc;
    acc.add(term);
    R prev = R(1);
    const long kmax = (long)real_cast<double>(cabs(z)) + 2;
    for (long k = 1; k < kmax; ++k) {
        term = term * C(R(k), R(0)) / z;
        const R mag = cabs(term);
        if (mag >= prev) break;
        acc.add(term);
        prev = mag;
    }
    const C sum = exp(z) / z * acc.template value_as<C>();
    const R y = cimag(z);
    if (y > R(0)) return sum + C(R(0), pi_v<R>());
    if (y < R(0)) return sum - C(R(0), pi_v<R>());
    return sum;  // real axis: principal value
}

template <class R> double ei_asym_threshold() {
    const int d = working_digits10<R>();
    if (d <= 17) return 40.0;
    if (d <= 45) return 97.0;
    return 185.0;
}

} // namespace detail

template <class C> C exp_integral_ei(const C& z, const PrecisionContext& ctx) {
    using R = real_t<C>;
    if (cabs(z) == R(0)) throw domain_error("Ei: z = 0");
    if (cimag(z) < R(0)) return cconj(exp_integral_ei(cconj(z), ctx));
    const double az = real_cast<double>(cabs(z));
    if (az >= detail::ei_asym_threshold<R>()) return detail::ei_asymptotic(z);
    // the series terms peak near e^|z| before the sum collapses to O(1) when
    // Re z < 0, so run the series one tier up once that loss bites
    const double digits_lost =
        (creal(z) < R(0)) ? std::max(0.0, 0.4343 * az - 1.0) : 0.0;
    if (digits_lost <= 2.0) return detail::ei_series(z, ctx);
    if constexpr (std::is_same_v<R, real53>) {
        // guard tier keeps >= 40 - 18 digits over the whole |z| < 40 band
        const complex128 w(real128(creal(z)), real128(cimag(z)));
        const complex128 r = detail::ei_series(w, ctx);
        return C((double)creal(r), (double)cimag(r));
    } else if constexpr (std::is_same_v<R, real128>) {
        if (working_digits10<real256>() - digits_lost <
            working_digits10<real128>() + 4)
            throw no_convergence(
                "Ei: |z| in the unsupported band for 128-bit precision "
                "(evaluate at 53-bit instead)");
        const complex256 w(real256(creal(z)), real256(cimag(z)));
        const complex256 r = detail::ei_series(w, ctx);
        return C(real_cast<real128>(creal(r)), real_cast<real128>(cimag(r)));
    } else {
        if (working_digits10<R>() - digits_lost < 20)
            throw no_convergence("Ei: |z| too large for the 256-bit series band");
        return detail::ei_series(z, ctx);
    }
}

// ---------------------------------------------------------------------------
// dilogarithm Li2(x), x <= 1 real

template <class R> R dilog(const R& x) {
    using std::log;
    if (!(x <= R(1))) throw domain_error("dilog: x must be <= 1");
    const R pi2_6 = pi_v<R>() * pi_v<R>() / 6;
    if (x == R(1)) return pi2_6;
    if (x == R(0)) return R(0);
    if (x < R(-1)) {
        // inversion: Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x)
        const R l = log(-x);
        return -pi2_6 - l * l / 2 - dilog(1 / x);
    }
    if (x > R(0.5)) {
        // reflection: Li2(x) = pi^2/6 - log(x)log(1-x) - Li2(1-x)
        return pi2_6 - log(x) * log(1 - x) - dilog(1 - x);
    }
    if (x < R(-0.5)) {
        // Landen: Li2(x) = -log^2(1-x)/2 - Li2(x/(x-1))
        const R l = log(1 - x);
        return -l * l / 2 - dilog(x / (x - 1));
    }
    // series
    kahan_sum<R> acc;
    R p = x;
    const R eps = std::numeric_limits<R>::epsilon();
    for (long k = 1; k < 100000; ++k) {
        acc.add(p / (R(k) * R(k)));
        p *= x;
        using std::abs;
        if (abs(p) <= eps * (abs(acc.value()) + eps)) break;
    }
    return acc.value();
}

// ---------------------------------------------------------------------------
// incomplete beta

// B_x(a,b) = int_0^x s^{a-1} (1-s)^{b-1} ds
//          = x^a sum_{n>=0} ((1-b)_n / n!) x^n / (a+n)
template <class C, class R> C incomplete_beta(const R& x, const C& a, const C& b,
                                              const PrecisionContext& ctx) {
    using std::exp; using std::log;
    if (!(x > R(0) && x < R(1)))
        throw domain_error("incomplete_beta: x must lie in (0,1)");
    if (!(creal(a) > R(0)))
        throw domain_error("incomplete_beta: Re(a) must be > 0");
    if (cimag(a) < R(0) || (cimag(a) == R(0) && cimag(b) < R(0)))
        return cconj(incomplete_beta(x, cconj(a), cconj(b), ctx));
    const R tol = real_cast<R>(ctx.series_tolerance);
    C c(R(1), R(0));  // ((1-b)_n / n!) x^n
    kahan_cplx_sum<R> acc;
    acc.add(c / a);
    const double hump = real_cast<double>(cabs(b)) * real_cast<double>(x) /
                        (1.0 - real_cast<double>(x));
    for (long n = 1; n <= ctx.max_series_terms; ++n) {
        c = c * (C(R(n), R(0)) - b) * x / R(n);
        const C term = c / (a + C(R(n), R(0)));
        acc.add(term);
        const C s = acc.template value_as<C>();
        if (n > hump + 8 && cabs(term) <= tol * (cabs(s) + tol))
            return exp(a * log(x)) * s;
    }
    throw no_convergence("incomplete_beta: series budget exhausted (fall back to quadrature)");
}

// B_x(a, 0) = int_0^x s^{a-1}/(1-s) ds = sum_{n>=0} x^{a+n}/(a+n); Re(a) > 0,
// x < 1 (logarithmic divergence at x = 1). Near x = 1 the series needs
// O(1/(1-x)) terms, so the op switches to quadrature through the
// substitution s = 1 - e^-v, which removes the endpoint factor entirely.
template <class C, class R> C incomplete_beta_b0(const R& x, const C& a,
                                                 const PrecisionContext& ctx) {
    using std::exp; using std::log;
    if (!(x > R(0))) {
        if (x == R(0)) return C(R(0), R(0));
        throw domain_error("incomplete_beta_b0: x must lie in (0,1)");
    }
    if (!(x < R(1)))
        throw domain_error("incomplete_beta_b0: divergent at x >= 1");
    if (!(creal(a) > R(0)))
        throw domain_error("incomplete_beta_b0: Re(a) must be > 0");
    if (cimag(a) < R(0)) return cconj(incomplete_beta_b0(x, cconj(a), ctx));
    if (R(1) - x < R(0.05)) {
        // int_0^V (1 - e^-v)^{a-1} dv, V = -log(1-x); tau = log v makes the
        // small-v oscillation of the a-1 power uniform in the variable.
        const R tol = real_cast<R>(ctx.series_tolerance);
        const R V = -log(1 - x);
        const R tau_hi = log(V);
        const R tau_lo = log(tol) / creal(a) - R(2);
        const double phase = std::abs(real_cast<double>(cimag(a))) *
                             real_cast<double>(tau_hi - tau_lo);
        const int panels = quad::panels_for_phase(phase, 8);
        auto f = [&](const R& tau) -> C {
            const R v = exp(tau);
            const R base = R(1) - exp(-v);
            return exp((a - C(R(1), R(0))) * C(log(base), R(0))) * v;
        };
        return quad::refine_until(f, tau_lo, tau_hi, tol, panels, 16);
    }
    const R tol = real_cast<R>(ctx.series_tolerance);
    C p = exp(a * log(x));  // x^{a+n}
    kahan_cplx_sum<R> acc;
    for (long n = 0; n <= ctx.max_series_terms; ++n) {
        acc.add(p / (a + C(R(n), R(0))));
        p = p * x;
        const C s = acc.template value_as<C>();
        if (cabs(p) <= tol * (cabs(s) * cabs(a + C(R(n), R(0))) + tol) && n > 4)
            return s;
    }
    throw no_convergence("incomplete_beta_b0: series budget exhausted");
}

} // namespace gbx
