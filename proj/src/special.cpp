#include "harmonic/special.hpp"

#include <cmath>

#include "harmonic/quadrature.hpp"

namespace harmonic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos (g = 7) coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(Cx x, double radius) {
    if (x.real() > 0.5) return false;
    const double r = std::round(x.real());
    return r <= 0.0 && std::abs(x.real() - r) <= radius && std::abs(x.imag()) <= radius;
}

Cx lanczos_sum(Cx zm1) {
    Cx s(kLanczos[0]);
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (zm1 + static_cast<double>(i));
    return s;
}

}  // namespace

HypergeometricParams::HypergeometricParams(Cx a_, Cx b_, double c_)
    : a(a_), b(b_), c(c_), conjugate_pair(b_ == std::conj(a_)) {
    if (!(c_ > 0.0)) throw DomainError("hypergeometric parameter c must be positive");
}

Cx gamma(Cx x) {
    if (near_nonpositive_integer(x, 1e-9))
        throw PoleError("gamma pole: argument within 1e-9 of a nonpositive integer");
    if (x.real() < 0.5) return kPi / (std::sin(kPi * x) * gamma(Cx(1.0) - x));
    const Cx zm1 = x - Cx(1.0);
    const Cx t = zm1 + Cx(7.5);
    return std::sqrt(kTwoPi) * std::pow(t, zm1 + Cx(0.5)) * std::exp(-t) * lanczos_sum(zm1);
}

Cx log_gamma(Cx x) {
    if (near_nonpositive_integer(x, 1e-9))
        throw PoleError("log_gamma pole: argument within 1e-9 of a nonpositive integer");
    if (x.real() < 0.5)
        return std::log(Cx(kPi)) - std::log(std::sin(kPi * x)) - log_gamma(Cx(1.0) - x);
    const Cx zm1 = x - Cx(1.0);
    const Cx t = zm1 + Cx(7.5);
    return 0.5 * std::log(kTwoPi) + (zm1 + Cx(0.5)) * std::log(t) - t +
           std::log(lanczos_sum(zm1));
}

Cx pochhammer(Cx x, int n) {
    if (n < 0) throw DomainError("pochhammer order must be nonnegative");
    Cx p(1.0);
    for (int k = 0; k < n; ++k) p *= x + static_cast<double>(k);
    return p;
}

Cx hyp2f1(const HypergeometricParams& p, Cx z, SeriesOptions opt) {
    if (std::abs(z) > 0.95)
        throw DomainError("hyp2f1 series is evaluated only for |z| <= 0.95");
    Cx sum(1.0);
    Cx term(1.0);
    for (int n = 0; n < opt.max_terms; ++n) {
        term *= (p.a + static_cast<double>(n)) * (p.b + static_cast<double>(n)) /
                ((p.c + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        if (term == Cx(0.0)) return sum;  // terminating (polynomial) case
        sum += term;
        if (std::abs(term) < opt.rel_tol * std::abs(sum) + opt.abs_floor) return sum;
    }
    throw ConvergenceError("hyp2f1 exceeded its term budget", std::abs(term));
}

namespace {

Cx gamma_ratio(const HypergeometricParams& p, Cx second_num_arg) {
    return gamma(Cx(p.c)) * gamma(second_num_arg) / (gamma(Cx(p.c) - p.a) * gamma(Cx(p.c) - p.b));
}

}  // namespace

Cx gauss_value(const HypergeometricParams& p) {
    const Cx cab = Cx(p.c) - p.a - p.b;
    if (!(cab.real() > 0.0))
        throw DomainError("gauss_value requires Re(c - a - b) > 0");
    return gamma_ratio(p, cab);
}

Cx lemma_sum_a(const HypergeometricParams& p) {
    const Cx cab = Cx(p.c) - p.a - p.b;
    if (!(cab.real() > 1.0))
        throw DomainError("lemma_sum_a requires Re(c - a - b) > 1");
    return gamma_ratio(p, cab - Cx(1.0)) * (p.a * p.b + cab - Cx(1.0));
}

Cx lemma_sum_b(const HypergeometricParams& p) {
    const Cx cab = Cx(p.c) - p.a - p.b;
    if (!(cab.real() > 2.0))
        throw DomainError("lemma_sum_b requires Re(c - a - b) > 2");
    const Cx bracket = pochhammer(p.a, 2) * pochhammer(p.b, 2) / pochhammer(cab - Cx(2.0), 2) +
                       3.0 * p.a * p.b / (cab - Cx(1.0)) + Cx(1.0);
    return gamma_ratio(p, cab) * bracket;
}

namespace {

// lgamma(x + p) - lgamma(x + q) for x >= 1000, assembled from Stirling's
// series so no large terms cancel (plain lgamma differences at x ~ 1e7
// carry ~1e-8 of cancellation noise, which stalls adaptive quadrature).
double lgamma_diff(double p, double q, double x) {
    const double xp = x + p, xq = x + q;
    const double main = (xq - 0.5) * std::log1p((p - q) / xq) + (p - q) * std::log(xp) - (p - q);
    const double corr = (1.0 / xp - 1.0 / xq) / 12.0 -
                        (1.0 / (xp * xp * xp) - 1.0 / (xq * xq * xq)) / 360.0;
    return main + corr;
}

// Euler-Maclaurin estimate of sum_{n >= n0} (n+1)^k t(n) for real a, b > 0:
// explicit-term function extended to real argument, an integral in log
// space, and a two-point power-law remainder.
double series_tail(double a, double b, double c, int k, int n0) {
    const double norm = std::lgamma(c) - std::lgamma(a) - std::lgamma(b);
    auto f = [=](double x) {
        return std::pow(x + 1.0, k) *
               std::exp(lgamma_diff(a, 1.0, x) + lgamma_diff(b, c, x) + norm);
    };
    const double n = static_cast<double>(n0);
    const double cut = std::max(1e7, 16.0 * n);
    const double w_hi = std::log(cut / n);
    // abs_tol sits above the lgamma noise level of the integrand, so
    // bisection terminates; the accumulated panel error stays ~1e-11
    const double integral = integrate(
        [&](double w) {
            const double x = n * std::exp(w);
            return f(x) * x;
        },
        0.0, w_hi, {1e-12, 1e-13, 48});

    // f(x) ~ A x^{-s} (1 + e1/x) beyond the cut; s is known exactly.
    const double s = c + 1.0 - a - b - static_cast<double>(k);
    const double g1 = f(cut) * std::pow(cut, s);
    const double g2 = f(2.0 * cut) * std::pow(2.0 * cut, s);
    const double amp = 2.0 * g2 - g1;
    const double amp_e1_over_cut = g1 - amp;
    const double remainder = std::pow(cut, 1.0 - s) * (amp / (s - 1.0) + amp_e1_over_cut / s);

    const double boundary = 0.5 * f(n) - (f(n + 1.0) - f(n - 1.0)) / 24.0;
    return integral + remainder + boundary;
}

}  // namespace

WeightedSumResult weighted_series_sum(const HypergeometricParams& p, int weight_power,
                                      int max_terms, bool tail_correct) {
    Cx sum(0.0);
    Cx term(1.0);
    double last = 0.0;
    int used = 0;
    for (int n = 0; n < max_terms; ++n) {
        const Cx weighted = std::pow(static_cast<double>(n + 1), weight_power) * term;
        sum += weighted;
        last = std::abs(weighted);
        ++used;
        if (term == Cx(0.0)) break;
        term *= (p.a + static_cast<double>(n)) * (p.b + static_cast<double>(n)) /
                ((p.c + static_cast<double>(n)) * static_cast<double>(n + 1));
    }
    if (tail_correct && p.a.imag() == 0.0 && p.b.imag() == 0.0 && p.a.real() > 0.0 &&
        p.b.real() > 0.0 && used == max_terms) {
        const double s = p.c + 1.0 - p.a.real() - p.b.real() - weight_power;
        if (s > 1.05)
            sum += series_tail(p.a.real(), p.b.real(), p.c, weight_power, max_terms);
    }
    return {sum, last, used};
}

}  // namespace harmonic
