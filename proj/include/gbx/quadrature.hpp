// quadrature.hpp
//
// Quadrature toolkit used by the oracles and by the oscillatory fast paths.
//
//  * gauss_legendre(n)        -- nodes/weights on [-1,1], any tier (Newton on P_n)
//  * panel_integrate          -- fixed uniform panels, compensated panel sum
//  * refine_until             -- panel doubling until two sweeps agree
//  * integrate_singular       -- tanh-sinh (boost) for integrable endpoint
//                                singularities (log endpoints etc.)
//
// Oscillatory integrands are handled by choosing the panel count from the
// total accumulated phase (see callers); Gauss panels with ~6 points per
// period resolve e^{i w x} to near machine precision.

#pragma once

#include "gbx/numeric.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <functional>
#include <map>
#include <mutex>

namespace gbx::quad {

template <class R> struct gl_rule {
    std::vector<R> x;  // nodes in (-1, 1)
    std::vector<R> w;
};

// Newton iteration on Legendre polynomials; Chebyshev initial guesses.
template <class R> gl_rule<R> make_gauss_legendre(int n) {
    gl_rule<R> rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const R one(1);
    for (int i = 0; i < n; ++i) {
        using std::cos;
        R x = -cos(pi_v<R>() * (R(i) + R(0.75)) / (R(n) + R(0.5)));
        for (int it = 0; it < 200; ++it) {
            // evaluate P_n(x) and P_n'(x) by recurrence
            R p0 = one, p1 = x;
            for (int k = 2; k <= n; ++k) {
                R pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / R(k);
                p0 = p1;
                p1 = pk;
            }
            const R dp = R(n) * (x * p1 - p0) / (x * x - one);
            const R dx = p1 / dp;
            x -= dx;
            using std::abs;
            if (abs(dx) <= std::numeric_limits<R>::epsilon() * 4) break;
        }
        R p0 = one, p1 = x;
        for (int k = 2; k <= n; ++k) {
            R pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / R(k);
            p0 = p1;
            p1 = pk;
        }
        const R dp = R(n) * (x * p1 - p0) / (x * x - one);
        rule.x[i] = x;
        rule.w[i] = 2 / ((one - x * x) * dp * dp);
    }
    return rule;
}

template <class R> const gl_rule<R>& gauss_legendre(int n) {
    static std::map<int, gl_rule<R>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre<R>(n)).first;
    return it->second;
}

// Integral over [a,b] with `panels` uniform panels of an `order`-point rule.
// F returns a real or complex value; accumulation is compensated.
template <class R, class F>
auto panel_integrate(F&& f, const R& a, const R& b, int panels, int order = 16)
    -> decltype(f(a)) {
    using V = decltype(f(a));
    const auto& rule = gauss_legendre<R>(order);
    const R h = (b - a) / panels;
    kahan_sum<R> sre, sim;
    for (int p = 0; p < panels; ++p) {
        const R mid = a + h * (R(p) + R(0.5));
        for (int i = 0; i < order; ++i) {
            const V v = f(mid + rule.x[i] * h / 2);
            if constexpr (std::is_same_v<V, R>) {
                sre.add(v * rule.w[i]);
            } else {
                sre.add(creal(v) * rule.w[i]);
                sim.add(cimag(v) * rule.w[i]);
            }
        }
    }
    if constexpr (std::is_same_v<V, R>) {
        return sre.value() * h / 2;
    } else {
        return V(sre.value() * h / 2, sim.value() * h / 2);
    }
}

// Panel doubling until two consecutive sweeps agree to tol (abs + rel mix).
// start_panels should already resolve the oscillation; doubling then
// converges superexponentially for analytic integrands.
template <class R, class F>
auto refine_until(F&& f, const R& a, const R& b, const R& tol,
                  int start_panels = 4, int order = 16, int max_doublings = 12)
    -> decltype(f(a)) {
    using V = decltype(f(a));
    int panels = std::max(1, start_panels);
    V prev = panel_integrate(f, a, b, panels, order);
    for (int k = 0; k < max_doublings; ++k) {
        panels *= 2;
        V cur = panel_integrate(f, a, b, panels, order);
        using std::abs;
        R err;
        if constexpr (std::is_same_v<V, R>) err = abs(cur - prev);
        else err = cabs(V(cur - prev));
        R scale;
        if constexpr (std::is_same_v<V, R>) scale = abs(cur);
        else scale = cabs(cur);
        if (err <= tol * (1 + scale)) return cur;
        prev = cur;
    }
    throw no_convergence("refine_until: quadrature did not settle");
}

// tanh-sinh for integrands with integrable endpoint singularities.
// Complex integrands are split into real and imaginary passes because the
// boost rule only accepts real-valued functions at multiprecision tiers.
template <class R, class F>
R integrate_singular_real(F&& f, const R& a, const R& b, const R& tol) {
    boost::math::quadrature::tanh_sinh<R> ts;
    return ts.integrate(f, a, b, tol);
}

template <class R, class F>
auto integrate_singular(F&& f, const R& a, const R& b, const R& tol) -> decltype(f(a)) {
    using V = decltype(f(a));
    if constexpr (std::is_same_v<V, R>) {
        return integrate_singular_real(f, a, b, tol);
    } else {
        const R re = integrate_singular_real([&](const R& t) { return creal(f(t)); }, a, b, tol);
        const R im = integrate_singular_real([&](const R& t) { return cimag(f(t)); }, a, b, tol);
        return V(re, im);
    }
}

// Panel count that resolves total phase `phase_rad` at ~6.4 points per
// period with 16-point panels (2.5 periods per panel).
inline int panels_for_phase(double phase_rad, int min_panels = 4) {
    const double periods = std::abs(phase_rad) / (2 * 3.14159265358979323846);
    return std::max(min_panels, (int)std::ceil(periods / 2.5) + 1);
}

} // namespace gbx::quad
