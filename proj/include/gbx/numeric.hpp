// numeric.hpp
//
// Precision tiers and complex arithmetic shared by every module.
//
// Three working precisions are compiled in:
//   real53  = IEEE double                  (fast paths: double sums, sweeps)
//   real128 = cpp_bin_float, 133-bit significand   (default verification tier)
//   real256 = cpp_bin_float, 259-bit significand   (oracle / guard tier)
//
// All gamma-factor products are meant to be formed in log space and
// exponentiated once; nothing in this header does that for you, but the
// exp_re_cos/exp_of helpers keep the hot loops free of std::complex exp.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbx {

namespace mp = boost::multiprecision;

using real53  = double;
using real128 = mp::number<mp::cpp_bin_float<40>, mp::et_off>;
using real256 = mp::number<mp::cpp_bin_float<78>, mp::et_off>;

using complex53  = std::complex<double>;
using complex128 = mp::cpp_complex<40>;
using complex256 = mp::cpp_complex<78>;

template <class R> struct complex_for;
template <> struct complex_for<real53>  { using type = complex53;  };
template <> struct complex_for<real128> { using type = complex128; };
template <> struct complex_for<real256> { using type = complex256; };
template <class R> using complex_t = typename complex_for<R>::type;

template <class C> struct real_for;
template <> struct real_for<complex53>  { using type = real53;  };
template <> struct real_for<complex128> { using type = real128; };
template <> struct real_for<complex256> { using type = real256; };
template <class C> using real_t = typename real_for<C>::type;

// ---------------------------------------------------------------------------
// errors

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct no_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// uniform complex access

template <class R> inline complex_t<R> make_cplx(const R& re, const R& im) {
    return complex_t<R>(re, im);
}

inline double creal(const complex53& z)  { return z.real(); }
inline double cimag(const complex53& z)  { return z.imag(); }
inline real128 creal(const complex128& z) { return z.real(); }
inline real128 cimag(const complex128& z) { return z.imag(); }
inline real256 creal(const complex256& z) { return z.real(); }
inline real256 cimag(const complex256& z) { return z.imag(); }

template <class C> inline real_t<C> cabs(const C& z) {
    using std::abs;
    return abs(z);
}

template <class C> inline real_t<C> carg(const C& z) {
    using std::atan2;
    return atan2(cimag(z), creal(z));
}

template <class C> inline C cconj(const C& z) {
    return C(creal(z), -cimag(z));
}

// exp(re) * (cos(im) + i sin(im)) without forming a complex exponent first.
template <class R> inline complex_t<R> exp_of(const R& re, const R& im) {
    using std::exp; using std::cos; using std::sin;
    const R m = exp(re);
    return complex_t<R>(m * cos(im), m * sin(im));
}

template <class R> inline R exp_re_cos(const R& re, const R& im) {
    using std::exp; using std::cos;
    return exp(re) * cos(im);
}

template <class R> inline bool is_finite_val(const R& x) {
    using std::isfinite;
    return isfinite(x);
}

template <class C> inline bool is_finite_cplx(const C& z) {
    return is_finite_val(creal(z)) && is_finite_val(cimag(z));
}

template <class C> inline void require_finite(const C& z, const char* what) {
    if (!is_finite_cplx(z))
        throw no_convergence(std::string(what) + ": non-finite result (overflow?)");
}

// ---------------------------------------------------------------------------
// constants

template <class R> inline R pi_v()        { return boost::math::constants::pi<R>(); }
template <class R> inline R euler_v()     { return boost::math::constants::euler<R>(); }
template <class R> inline R log2pi_v()    {
    using std::log;
    return log(2 * pi_v<R>());
}
template <class R> inline R ln2_v()       { return boost::math::constants::ln_two<R>(); }

template <class R> inline int working_digits10() {
    return std::numeric_limits<R>::digits10;
}

// ---------------------------------------------------------------------------
// PrecisionContext: explicit precision state handed to the special functions.
// significand_bits selects the compiled tier; series_tolerance and
// max_series_terms bound every series / continued fraction in that tier.

struct PrecisionContext {
    int significand_bits = 128;
    double series_tolerance = 1e-36;
    long max_series_terms = 200000;

    void validate() const {
        if (significand_bits < 53)
            throw domain_error("PrecisionContext: significand_bits must be >= 53");
        // tolerance >= 2^(1-bits); 2^-x underflows double beyond x ~ 1074,
        // where the constraint is vacuous anyway.
        if (significand_bits < 1000) {
            const double floor_tol = std::ldexp(1.0, 1 - significand_bits);
            if (series_tolerance < floor_tol)
                throw domain_error("PrecisionContext: tolerance below 2^(1-bits)");
        }
        if (series_tolerance <= 0)
            throw domain_error("PrecisionContext: tolerance must be positive");
        if (max_series_terms < 8)
            throw domain_error("PrecisionContext: max_series_terms too small");
    }

    static PrecisionContext for_bits(int bits) {
        PrecisionContext ctx;
        ctx.significand_bits = bits;
        if (bits <= 53)       ctx.series_tolerance = 1e-15;
        else if (bits <= 133) ctx.series_tolerance = 1e-36;
        else                  ctx.series_tolerance = 1e-74;
        ctx.validate();
        return ctx;
    }
};

// Map requested bits onto the nearest compiled tier (rounding up).
inline int tier_bits(int requested) {
    if (requested <= 53) return 53;
    if (requested <= 133) return 128;
    if (requested <= 259) return 256;
    throw domain_error("precision > 256 significand bits is not compiled in");
}

// ---------------------------------------------------------------------------
// compensated accumulation
//
// Neumaier variant of Kahan summation; the deterministic chunked reduction
// below is the reduction contract used by every zero sum: fixed chunk
// boundaries, chunks combined in index order, so any future parallel fill
// reproduces the serial result bit for bit.

template <class T> struct kahan_sum {
    T sum{};
    T comp{};

    void add(const T& v) {
        using std::abs;
        const T t = sum + v;
        if (abs(sum) >= abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    T value() const { return sum + comp; }
};

template <class T> struct kahan_cplx_sum {
    kahan_sum<T> re, im;
    template <class C> void add(const C& v) { re.add(creal(v)); im.add(cimag(v)); }
    template <class C> C value_as() const { return C(re.value(), im.value()); }
};

inline constexpr std::size_t kDeterministicChunk = 1024;

// Sums f(0), ..., f(n-1) with per-chunk compensation, chunks combined in
// order. f must be a pure function of the index.
template <class T, class F>
T deterministic_sum(std::size_t n, F&& f) {
    kahan_sum<T> total;
    for (std::size_t base = 0; base < n; base += kDeterministicChunk) {
        const std::size_t end = std::min(n, base + kDeterministicChunk);
        kahan_sum<T> chunk;
        for (std::size_t i = base; i < end; ++i) chunk.add(f(i));
        total.add(chunk.value());
    }
    return total.value();
}

// ---------------------------------------------------------------------------
// decimal conversion (reports serialize numbers as decimal strings)

inline std::string to_decimal_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
inline std::string to_decimal_string(const real128& x) {
    return x.str(std::numeric_limits<real128>::digits10, std::ios_base::scientific);
}
inline std::string to_decimal_string(const real256& x) {
    return x.str(std::numeric_limits<real256>::digits10, std::ios_base::scientific);
}

template <class R> inline R real_from_string(const std::string& s);
template <> inline real53 real_from_string<real53>(const std::string& s) { return std::stod(s); }
template <> inline real128 real_from_string<real128>(const std::string& s) { return real128(s); }
template <> inline real256 real_from_string<real256>(const std::string& s) { return real256(s); }

// cross-tier conversion (exact widening / rounded narrowing)
template <class To, class From> inline To real_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) return x;
    else if constexpr (std::is_same_v<To, double>) return static_cast<double>(x);
    else return To(x);
}

} // namespace gbx
