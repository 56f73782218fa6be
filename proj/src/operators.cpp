#include "harmonic/operators.hpp"

#include <cmath>
#include <limits>

#include "harmonic/quadrature.hpp"

namespace harmonic {

namespace {

int polynomial_degree(const HarmonicMap& f) {
    int deg = 0;
    for (std::size_t n = f.truncation_order(); n >= 1; --n) {
        if (f.h().coeff(n) != Cx(0.0) || f.g().coeff(n) != Cx(0.0)) {
            deg = static_cast<int>(n);
            break;
        }
    }
    return deg;
}

// Integrates w(t) part(t z) over t in (0, 1) after the substitution
// t = u^s, which turns the endpoint weight t^sigma into u^{s(sigma+1)-1}
// and keeps the integrand smooth for adaptive panels.
template <class Weight>
Cx weighted_part_integral(const ComplexCoeffSeq& part, Cx z, double sigma, Weight&& w,
                          double split_at_t = 0.0) {
    const double s = std::max(1.0, 3.0 / (sigma + 1.0));
    auto integrand = [&](double u) -> Cx {
        const double t = std::pow(u, s);
        const double du_factor = s * std::pow(u, s - 1.0);
        // below this the weight could overflow while the product is ~0
        if (t <= 1e-150) return Cx(0.0);
        return w(t) * part.eval(t * z) * du_factor;
    };
    const QuadratureOptions opt{1e-12, 1e-15, 52};
    if (split_at_t > 0.0) {
        const double u_split = std::pow(split_at_t, 1.0 / s);
        return integrate_complex(integrand, 0.0, u_split, opt) +
               integrate_complex(integrand, u_split, 1.0, opt);
    }
    return integrate_complex(integrand, 0.0, 1.0, opt);
}

}  // namespace

OperatorParams OperatorParams::finite(double a, double b) {
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("operator parameters must exceed -1");
    if (b == a) throw DomainError("finite parameters require b != a (use equal_to_a)");
    return OperatorParams(a, Kind::finite, b);
}

OperatorParams OperatorParams::limit_infinity(double a) {
    if (!(a > -1.0)) throw DomainError("operator parameter must exceed -1");
    return OperatorParams(a, Kind::limit_infinity, 0.0);
}

OperatorParams OperatorParams::equal_to_a(double a) {
    if (!(a > -1.0)) throw DomainError("operator parameter must exceed -1");
    return OperatorParams(a, Kind::equal_to_a, a);
}

double hab_factor(const OperatorParams& p, int n) {
    const double dn = static_cast<double>(n);
    switch (p.kind) {
        case OperatorParams::Kind::finite:
            return (p.a + 1.0) * (p.b + 1.0) / ((p.a + dn) * (p.b + dn));
        case OperatorParams::Kind::limit_infinity:
            return (p.a + 1.0) / (p.a + dn);
        case OperatorParams::Kind::equal_to_a: {
            const double f = (p.a + 1.0) / (p.a + dn);
            return f * f;
        }
    }
    return 0.0;
}

HarmonicMap apply_hab(const OperatorParams& p, const HarmonicMap& f) {
    const std::size_t n = f.truncation_order();
    std::vector<Cx> hc(n), gc(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double factor = hab_factor(p, static_cast<int>(k + 1));
        hc[k] = factor * f.h().coeffs()[k];
        gc[k] = factor * f.g().coeffs()[k];
    }
    return HarmonicMap(std::move(hc), std::move(gc));
}

Cx hab_integral_oracle(const OperatorParams& p, const HarmonicMap& f, DiskPoint z) {
    if (polynomial_degree(f) > 64)
        throw DomainError("integral oracle accepts polynomials of degree <= 64");
    const Cx zv = z.value();
    const double a = p.a;

    auto transform_part = [&](const ComplexCoeffSeq& part) -> Cx {
        switch (p.kind) {
            case OperatorParams::Kind::finite: {
                const double b = p.b;
                // integrand ~ t^{min(a,b)} near 0 once the series' leading
                // power is included
                const double sigma = std::min(a, b);
                const Cx val = weighted_part_integral(
                    part, zv, sigma,
                    [&](double t) { return std::pow(t, a - 1.0) * (1.0 - std::pow(t, b - a)); });
                return (a + 1.0) * (b + 1.0) / (b - a) * val;
            }
            case OperatorParams::Kind::limit_infinity: {
                const Cx val = weighted_part_integral(
                    part, zv, a, [&](double t) { return std::pow(t, a - 1.0); });
                return (a + 1.0) * val;
            }
            case OperatorParams::Kind::equal_to_a: {
                const Cx val = weighted_part_integral(
                    part, zv, a, [&](double t) { return std::pow(t, a - 1.0) * std::log(t); },
                    1e-3);
                return -(a + 1.0) * (a + 1.0) * val;
            }
        }
        return Cx(0.0);
    };

    return transform_part(f.h()) + std::conj(transform_part(f.g()));
}

double phi(double n, double a, double b) {
    return 2.0 * n * n - 2.0 * (1.0 + a * b) * n + (3.0 * a * b + a + b + 1.0);
}

double psi(int n) {
    if (n < 2) throw DomainError("psi is defined for n >= 2");
    const double s2 = std::sqrt(2.0);
    const double s2n1 = std::sqrt(2.0 * n - 1.0);
    return (s2 * n - s2n1) / (s2n1 - s2);
}

TransferVerdict transfer_condition(double a, double b) {
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("transfer parameters must exceed -1");
    TransferVerdict v;

    const double vertex = (1.0 + a * b) / 2.0;
    const int n_hi = std::max(2, static_cast<int>(std::ceil(vertex))) + 2;
    v.phi_min_over_n = phi(2.0, a, b);
    for (int n = 3; n <= n_hi; ++n) v.phi_min_over_n = std::min(v.phi_min_over_n, phi(n, a, b));

    // discriminant/4 of phi(n) = 0 in the normalization below
    const double disc = (1.0 + a * b) * (1.0 + a * b) - 2.0 * (3.0 * a * b + a + b + 1.0);
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        v.roots = std::make_pair((1.0 + a * b + sq) / 2.0, (1.0 + a * b - sq) / 2.0);
    }

    if (a * b <= 3.0) {
        v.rule = TransferRule::product_bound;
        v.admissible = true;
        return v;
    }
    if (a * a * b * b - 4.0 * a * b - 2.0 * (a + b) <= 1.0) {
        v.rule = TransferRule::quartic_bound;
        v.admissible = true;
        return v;
    }
    if (v.roots) {
        const double r1 = v.roots->first, r2 = v.roots->second;
        if (std::floor(r1) == std::floor(r2)) {
            // guard the printed floor test: confirm phi is nonnegative on
            // the integers up to just past the larger root
            bool ok = true;
            for (int n = 2; n <= static_cast<int>(std::ceil(r1)) + 1; ++n)
                ok = ok && phi(n, a, b) >= 0.0;
            if (ok) {
                v.rule = TransferRule::floor_match;
                v.admissible = true;
                return v;
            }
        }
    }
    v.rule = TransferRule::none;
    v.admissible = false;
    return v;
}

bool special_case_ranges(SpecialCase which, double a) {
    if (!(a > -1.0)) throw DomainError("parameter must exceed -1");
    switch (which) {
        case SpecialCase::b_infinity:
            return a <= 0.0;
        case SpecialCase::a_equals_b:
            return a <= psi(3);
    }
    return false;
}

namespace {

TransferVerdict limit_kind_verdict(const OperatorParams& p) {
    TransferVerdict v;
    const bool infinity = p.kind == OperatorParams::Kind::limit_infinity;
    v.rule = infinity ? TransferRule::bernardi_limit : TransferRule::equal_params;
    v.admissible = special_case_ranges(
        infinity ? SpecialCase::b_infinity : SpecialCase::a_equals_b, p.a);
    double mn = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 100; ++n) {
        const double m = infinity
                             ? 2.0 * (p.a + n) - (p.a + 1.0) * (2.0 * n - 1.0)
                             : 2.0 * (p.a + n) * (p.a + n) -
                                   (p.a + 1.0) * (p.a + 1.0) * (2.0 * n - 1.0);
        mn = std::min(mn, m);
    }
    v.phi_min_over_n = mn;
    return v;
}

}  // namespace

std::pair<HarmonicMap, TransferVerdict> transfer_us_to_uk(const HarmonicMap& f,
                                                          const OperatorParams& p) {
    if (!us_sufficient(f).passed)
        throw HypothesisError("input map fails the starlike coefficient test");
    TransferVerdict v = p.kind == OperatorParams::Kind::finite ? transfer_condition(p.a, p.b)
                                                               : limit_kind_verdict(p);
    return {apply_hab(p, f), v};
}

HarmonicMap inverse_transfer(const HarmonicMap& f, double a) {
    if (!(a >= 1.0)) throw DomainError("inverse transfer requires a >= 1");
    if (std::abs(f.b1()) > 1e-12)
        throw HypothesisError("inverse transfer requires g'(0) = 0");
    if (!uk_sufficient(f).passed)
        throw HypothesisError("input map fails the convex coefficient test");
    const std::size_t n = f.truncation_order();
    std::vector<Cx> hc(n), gc(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double factor = (a + static_cast<double>(k + 1)) / (a + 1.0);
        hc[k] = factor * f.h().coeffs()[k];
        gc[k] = factor * f.g().coeffs()[k];
    }
    return HarmonicMap(std::move(hc), std::move(gc));
}

}  // namespace harmonic
