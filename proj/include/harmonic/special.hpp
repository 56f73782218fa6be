#pragma once

#include <complex>

#include "harmonic/errors.hpp"

namespace harmonic {

using Cx = std::complex<double>;

/// Parameters (a, b; c) of a Gaussian hypergeometric series. c must be a
/// positive real, which keeps it away from the pole set. conjugate_pair
/// is set when b equals conj(a) exactly (the regime in which the series
/// coefficients (a)_n (b)_n are real).
struct HypergeometricParams {
    Cx a;
    Cx b;
    double c;
    bool conjugate_pair;

    HypergeometricParams(Cx a_, Cx b_, double c_);
};

/// Gamma function by a 9-term Lanczos approximation (g = 7), with the
/// reflection formula for Re(x) < 1/2. Relative error is at the 1e-13
/// level on the real interval [0.5, 30]. Arguments within 1e-9 of a
/// nonpositive integer raise PoleError.
Cx gamma(Cx x);

/// log Gamma on the same scheme; principal values are only guaranteed
/// for the parameter ranges this library uses (real parts of moderate
/// size, small imaginary parts).
Cx log_gamma(Cx x);

/// Rising factorial (x)_n = x(x+1)...(x+n-1), direct product; (x)_0 = 1.
Cx pochhammer(Cx x, int n);

struct SeriesOptions {
    double rel_tol = 1e-16;
    double abs_floor = 1e-300;
    int max_terms = 20000;
};

/// Partial sum of sum_n (a)_n (b)_n / ((c)_n n!) z^n for |z| <= 0.95.
/// Terminates exactly when a or b is a nonpositive integer. Raises
/// ConvergenceError (with the last tail estimate) if the term budget is
/// exhausted first.
Cx hyp2f1(const HypergeometricParams& p, Cx z, SeriesOptions opt = {});

/// Value of the series at z = 1 in closed form,
/// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), for Re(c-a-b) > 0.
Cx gauss_value(const HypergeometricParams& p);

/// Closed form of sum_n (n+1) (a)_n (b)_n / ((c)_n n!), valid for
/// Re(c-a-b) > 1.
Cx lemma_sum_a(const HypergeometricParams& p);

/// Closed form of sum_n (n+1)^2 (a)_n (b)_n / ((c)_n n!), valid for
/// Re(c-a-b) > 2.
Cx lemma_sum_b(const HypergeometricParams& p);

struct WeightedSumResult {
    Cx value;
    double last_term;
    int terms;
};

/// Direct evaluation of sum_n (n+1)^k (a)_n (b)_n / ((c)_n n!) by term
/// recurrence. With tail_correct set (real a, b > 0 only) an
/// Euler-Maclaurin tail estimate is added so slowly decaying sums still
/// come out to ~1e-9 absolute accuracy.
WeightedSumResult weighted_series_sum(const HypergeometricParams& p, int weight_power,
                                      int max_terms, bool tail_correct = false);

}  // namespace harmonic
