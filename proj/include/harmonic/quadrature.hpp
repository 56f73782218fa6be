#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "harmonic/errors.hpp"

namespace harmonic {

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_depth = 52;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1]. Odd-index nodes and
// the center form the embedded Gauss-7 rule.
inline constexpr double kGkNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
double integrate_panel(F& f, double a, double b, int depth, const QuadratureOptions& o) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * kGkNodes[i];
        const double fv = (i == 7) ? f(c) : f(c - x) + f(c + x);
        kron += kKronrodW[i] * fv;
        if (i % 2 == 1 || i == 7) gauss += kGaussW[i / 2] * fv;
    }
    kron *= h;
    gauss *= h;
    const double err = std::abs(kron - gauss);
    if (err <= std::max(o.abs_tol, o.rel_tol * std::abs(kron))) return kron;
    if (depth >= o.max_depth)
        throw ConvergenceError("adaptive quadrature exceeded depth budget", err);
    return integrate_panel(f, a, c, depth + 1, o) + integrate_panel(f, c, b, depth + 1, o);
}

template <class F>
std::complex<double> integrate_panel_cx(F& f, double a, double b, int depth,
                                        const QuadratureOptions& o) {
    using Cd = std::complex<double>;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Cd kron(0.0), gauss(0.0);
    for (int i = 0; i < 8; ++i) {
        const double x = h * kGkNodes[i];
        const Cd fv = (i == 7) ? f(c) : f(c - x) + f(c + x);
        kron += kKronrodW[i] * fv;
        if (i % 2 == 1 || i == 7) gauss += kGaussW[i / 2] * fv;
    }
    kron *= h;
    gauss *= h;
    const double err = std::abs(kron - gauss);
    if (err <= std::max(o.abs_tol, o.rel_tol * std::abs(kron))) return kron;
    if (depth >= o.max_depth)
        throw ConvergenceError("adaptive quadrature exceeded depth budget", err);
    return integrate_panel_cx(f, a, c, depth + 1, o) + integrate_panel_cx(f, c, b, depth + 1, o);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of a real integrand over [lo, hi].
/// Panels are bisected until |K15 - G7| meets the tolerance.
template <class F>
double integrate(F&& f, double lo, double hi, QuadratureOptions opt = {}) {
    return detail::integrate_panel(f, lo, hi, 0, opt);
}

/// Same scheme for a complex-valued integrand of a real variable.
template <class F>
std::complex<double> integrate_complex(F&& f, double lo, double hi, QuadratureOptions opt = {}) {
    return detail::integrate_panel_cx(f, lo, hi, 0, opt);
}

}  // namespace harmonic
