#include "harmonic/families.hpp"

#include <cmath>

namespace harmonic {

namespace {

bool is_nonpositive_integer(Cx v) {
    return v.imag() == 0.0 && v.real() <= 0.0 && v.real() == std::round(v.real());
}

bool regime_ok(Cx a, Cx b) {
    const bool real_pair = a.imag() == 0.0 && b.imag() == 0.0 && a.real() > -1.0 &&
                           b.real() > -1.0 && a.real() * b.real() > 0.0;
    const bool conj_pair = b == std::conj(a) && a != Cx(0.0);
    return real_pair || conj_pair;
}

// Series term T_k = (a)_k (b)_k / ((c)_k k!), by recurrence.
std::vector<Cx> series_terms(const HypergeometricParams& p, int count) {
    std::vector<Cx> t(count);
    Cx term(1.0);
    for (int k = 0; k < count; ++k) {
        t[k] = term;
        term *= (p.a + static_cast<double>(k)) * (p.b + static_cast<double>(k)) /
                ((p.c + static_cast<double>(k)) * static_cast<double>(k + 1));
    }
    return t;
}

Cx gamma_ratio(const HypergeometricParams& p, Cx second_arg) {
    return gamma(Cx(p.c)) * gamma(second_arg) /
           (gamma(Cx(p.c) - p.a) * gamma(Cx(p.c) - p.b));
}

ConditionReport make_report(ConditionId id, double lhs, double threshold) {
    return {id, lhs <= threshold + kConditionSlack, lhs, threshold};
}

int exact_degree(const HypergeometricSpec& s) {
    // terminating series: a (hence b) a nonpositive integer
    const int m = static_cast<int>(-s.params.a.real());
    switch (s.family) {
        case Family::f1:
        case Family::f3:
            return m + 1;
        case Family::f2:
            return std::max(m, 1);
    }
    return m + 1;
}

}  // namespace

HypergeometricSpec::HypergeometricSpec(HypergeometricParams p, Cx alpha_, Family fam, int trunc)
    : params(p), alpha(alpha_), family(fam), truncation_order(trunc) {
    if (!regime_ok(p.a, p.b))
        throw DomainError(
            "parameters must be a real pair in (-1, inf) with ab > 0, or a conjugate pair");
    if (!(std::abs(alpha_) < 1.0)) throw DomainError("|alpha| must be < 1");
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
}

std::string condition_name(ConditionId id) {
    switch (id) {
        case ConditionId::us_f1: return "us_f1";
        case ConditionId::us_f2: return "us_f2";
        case ConditionId::us_f3: return "us_f3";
        case ConditionId::uk_f1: return "uk_f1";
        case ConditionId::uk_f2: return "uk_f2";
        case ConditionId::uk_f3: return "uk_f3";
        case ConditionId::poly_f1: return "poly_f1";
        case ConditionId::poly_f2: return "poly_f2";
        case ConditionId::poly_f3: return "poly_f3";
        case ConditionId::quartic_example: return "quartic_example";
    }
    return "unknown";
}

HarmonicMap build_family(const HypergeometricSpec& spec) {
    const int n = spec.truncation_order > 0 ? spec.truncation_order
                                            : recommended_truncation(spec);
    const Cx half_alpha = spec.alpha / 2.0;
    const std::vector<Cx> t = series_terms(spec.params, n + 1);

    std::vector<Cx> gc(n, Cx(0.0));
    switch (spec.family) {
        case Family::f1:
            for (int k = 1; k <= n; ++k) gc[k - 1] = half_alpha * t[k - 1];
            break;
        case Family::f2:
            for (int k = 1; k <= n; ++k) gc[k - 1] = half_alpha * t[k];
            break;
        case Family::f3:
            for (int k = 1; k <= n; ++k) gc[k - 1] = half_alpha * t[k - 1] / static_cast<double>(k);
            break;
    }
    std::vector<Cx> hc(n, Cx(0.0));
    hc[0] = Cx(1.0);
    return HarmonicMap(std::move(hc), std::move(gc));
}

ConditionReport starlike_condition(const HypergeometricSpec& spec) {
    const HypergeometricParams& p = spec.params;
    const Cx cab = Cx(p.c) - p.a - p.b;
    const double am = std::abs(spec.alpha);
    switch (spec.family) {
        case Family::f1: {
            if (!(cab.real() > 1.0))
                throw DomainError("starlike condition for f1 requires c > Re(a+b) + 1");
            const Cx v = gamma_ratio(p, cab - Cx(1.0)) * (p.a * p.b + cab - Cx(1.0));
            return make_report(ConditionId::us_f1, am * v.real(), 1.0);
        }
        case Family::f2: {
            if (!(cab.real() > 1.0))
                throw DomainError("starlike condition for f2 requires c > Re(a+b) + 1");
            const Cx v = p.a * p.b * gamma_ratio(p, cab - Cx(1.0));
            return make_report(ConditionId::us_f2, am * v.real(), 1.0);
        }
        case Family::f3: {
            if (!(cab.real() > 0.0))
                throw DomainError("starlike condition for f3 requires c > Re(a+b)");
            return make_report(ConditionId::us_f3, am * gamma_ratio(p, cab).real(), 1.0);
        }
    }
    throw DomainError("unknown family");
}

ConditionReport convex_condition(const HypergeometricSpec& spec) {
    const HypergeometricParams& p = spec.params;
    const Cx cab = Cx(p.c) - p.a - p.b;
    const double am = std::abs(spec.alpha);
    switch (spec.family) {
        case Family::f1: {
            if (!(cab.real() > 2.0))
                throw DomainError("convex condition for f1 requires c > Re(a+b) + 2");
            const Cx bracket =
                2.0 * pochhammer(p.a, 2) * pochhammer(p.b, 2) / pochhammer(cab - Cx(2.0), 2) +
                5.0 * p.a * p.b / (cab - Cx(1.0)) + Cx(1.0);
            const Cx v = gamma_ratio(p, cab) * bracket;
            return make_report(ConditionId::uk_f1, am * v.real(), 2.0);
        }
        case Family::f2: {
            if (!(cab.real() > 2.0))
                throw DomainError("convex condition for f2 requires c > Re(a+b) + 2");
            const Cx v = p.a * p.b * gamma_ratio(p, cab - Cx(1.0)) *
                         ((p.a + p.b + Cx(p.c) + 2.0 * p.a * p.b) / (cab - Cx(2.0)));
            return make_report(ConditionId::uk_f2, am * v.real(), 2.0);
        }
        case Family::f3: {
            if (!(cab.real() > 1.0))
                throw DomainError("convex condition for f3 requires c > Re(a+b) + 1");
            const Cx v = gamma_ratio(p, cab) *
                         ((2.0 * p.a * p.b + cab - Cx(1.0)) / (cab - Cx(1.0)));
            return make_report(ConditionId::uk_f3, am * v.real(), 2.0);
        }
    }
    throw DomainError("unknown family");
}

CThresholds c_thresholds_a1(double b, Cx alpha) {
    if (!(b > 0.0)) throw DomainError("threshold formulas require b > 0");
    const double am = std::abs(alpha);
    if (!(am < 1.0)) throw DomainError("|alpha| must be < 1");
    const double beta_plus =
        (2.0 * b + 3.0 - 3.0 * am +
         std::sqrt(am * am + 2.0 * am * (2.0 * b * b - 1.0) + 1.0)) /
        (2.0 * (1.0 - am));
    const double gamma_plus =
        (2.0 * b + 3.0 + b * am +
         std::sqrt(b * b * (am * am + 4.0 * am) + 2.0 * am * b + 1.0)) /
        2.0;
    return {beta_plus, gamma_plus, 1.0 + b / (1.0 - am)};
}

std::array<ConditionReport, 3> polynomial_conditions(int m, double c, Cx alpha) {
    if (m < 1) throw DomainError("polynomial degree parameter m must be a positive integer");
    if (!(c > 0.0)) throw DomainError("c must be positive");
    const double am = std::abs(alpha);
    if (!(am < 1.0)) throw DomainError("|alpha| must be < 1");
    const double md = static_cast<double>(m);
    // log-space Gamma ratio keeps large m and c overflow-free
    const double ratio1 =
        std::exp(std::lgamma(c) + std::lgamma(c + 2.0 * md - 1.0) - 2.0 * std::lgamma(c + md));
    const double ratio2 =
        std::exp(std::lgamma(c) + std::lgamma(c + 2.0 * md) - 2.0 * std::lgamma(c + md));
    return {make_report(ConditionId::poly_f1, am * ratio1 * (md * md + 2.0 * md + c - 1.0), 1.0),
            make_report(ConditionId::poly_f2, am * md * md * ratio1, 1.0),
            make_report(ConditionId::poly_f3, am * ratio2, 1.0)};
}

HarmonicMap polynomial_map(Family fam, int m, double c, Cx alpha) {
    if (m < 1) throw DomainError("polynomial degree parameter m must be a positive integer");
    if (!(c > 0.0)) throw DomainError("c must be positive");
    if (!(std::abs(alpha) < 1.0)) throw DomainError("|alpha| must be < 1");

    // q_n = binom(m, n) (m-n+1)_n / (c)_n for n = 0..m
    std::vector<double> q(m + 1);
    for (int n = 0; n <= m; ++n) {
        double binom = 1.0, rising = 1.0, cp = 1.0;
        for (int k = 0; k < n; ++k) {
            binom *= static_cast<double>(m - k) / static_cast<double>(k + 1);
            rising *= static_cast<double>(m - n + 1 + k);
            cp *= c + static_cast<double>(k);
        }
        q[n] = binom * rising / cp;
    }

    const Cx half_alpha = alpha / 2.0;
    const int degree = (fam == Family::f2) ? std::max(m, 1) : m + 1;
    std::vector<Cx> gc(degree, Cx(0.0));
    switch (fam) {
        case Family::f1:
            for (int n = 0; n <= m; ++n) gc[n] = half_alpha * q[n];
            break;
        case Family::f2:
            for (int n = 1; n <= m; ++n) gc[n - 1] = half_alpha * q[n];
            break;
        case Family::f3:
            for (int n = 0; n <= m; ++n) gc[n] = half_alpha * q[n] / static_cast<double>(n + 1);
            break;
    }
    std::vector<Cx> hc(degree, Cx(0.0));
    hc[0] = Cx(1.0);
    return HarmonicMap(std::move(hc), std::move(gc));
}

ConditionReport quartic_example_condition(double c, Cx alpha) {
    if (!(c > 0.0)) throw DomainError("c must be positive");
    const double am = std::abs(alpha);
    if (!(am > 0.0 && am < 1.0)) throw DomainError("requires 0 < |alpha| < 1");
    const double lhs = am * (60.0 + 47.0 * c + 12.0 * c * c + c * c * c);
    const double threshold = 2.0 * c + 3.0 * c * c + c * c * c;
    return make_report(ConditionId::quartic_example, lhs, threshold);
}

HarmonicMap quartic_example_map(double c, Cx alpha) {
    return polynomial_map(Family::f3, 3, c, alpha);
}

double family_tail_estimate(const HypergeometricSpec& spec) {
    const int n = spec.truncation_order > 0 ? spec.truncation_order
                                            : recommended_truncation(spec);
    const int extended = std::max(8 * n, 20000);
    const std::vector<Cx> t = series_terms(spec.params, extended + 1);
    const double half = 0.5 * std::abs(spec.alpha);
    double tail = 0.0;
    for (int k = n + 1; k <= extended; ++k) {
        const double kk = static_cast<double>(k);
        double coeff = 0.0;
        switch (spec.family) {
            case Family::f1: coeff = std::abs(t[k - 1]); break;
            case Family::f2: coeff = std::abs(t[k]); break;
            case Family::f3: coeff = std::abs(t[k - 1]) / kk; break;
        }
        tail += kk * (2.0 * kk - 1.0) * half * coeff;
    }
    return tail;
}

int recommended_truncation(const HypergeometricSpec& spec) {
    if (is_nonpositive_integer(spec.params.a) || is_nonpositive_integer(spec.params.b))
        return exact_degree(spec);
    bool near = false;
    try {
        const ConditionReport r = starlike_condition(spec);
        near = near || std::abs(r.lhs_value - r.threshold) < 0.1 * r.threshold;
    } catch (const DomainError&) {
    }
    try {
        const ConditionReport r = convex_condition(spec);
        near = near || std::abs(r.lhs_value - r.threshold) < 0.1 * r.threshold;
    } catch (const DomainError&) {
    }
    return near ? 1024 : 256;
}

}  // namespace harmonic
