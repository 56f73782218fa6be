#include "harmonic/verify.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <vector>

#include "harmonic/bounds.hpp"
#include "harmonic/class_tests.hpp"
#include "harmonic/families.hpp"
#include "harmonic/geometry.hpp"
#include "harmonic/operators.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/special.hpp"

namespace harmonic {

namespace {

struct Battery {
    std::ostream& os;
    int failures = 0;

    void check(const std::string& name, bool ok, double measure) {
        os << (ok ? "  ok    " : "  FAIL  ") << std::left << std::setw(44) << name
           << std::scientific << std::setprecision(3) << measure << "\n";
        if (!ok) ++failures;
    }
};

// Random map comfortably inside the convex-test region, degree <= 8.
HarmonicMap random_uk_map(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    const int degree = 2 + static_cast<int>(unit(rng) * 7.0);
    std::vector<Cx> hc(degree, Cx(0.0)), gc(degree, Cx(0.0));
    hc[0] = Cx(1.0);
    const double b1 = 0.6 * unit(rng);
    gc[0] = std::polar(b1, angle(rng));
    double budget = (1.0 - b1) * (0.2 + 0.75 * unit(rng));
    for (int n = 2; n <= degree; ++n) {
        const double w = static_cast<double>(n) * (2.0 * n - 1.0);
        const double share = budget * unit(rng);
        budget -= share;
        const double mag = share / w;
        if (unit(rng) < 0.5)
            hc[n - 1] = std::polar(mag, angle(rng));
        else
            gc[n - 1] = std::polar(mag, angle(rng));
    }
    return HarmonicMap(std::move(hc), std::move(gc));
}

HarmonicMap random_polynomial(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<Cx> hc(degree), gc(degree);
    hc[0] = Cx(1.0);
    for (int n = 1; n < degree; ++n) {
        hc[n] = Cx(coeff(rng), coeff(rng)) / static_cast<double>((n + 1) * (n + 1));
        gc[n] = Cx(coeff(rng), coeff(rng)) / static_cast<double>((n + 1) * (n + 1));
    }
    gc[0] = 0.3 * Cx(coeff(rng), coeff(rng));
    return HarmonicMap(std::move(hc), std::move(gc));
}

}  // namespace

int run_verification(std::ostream& os, int threads) {
    Battery bat{os};
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    os << "cross-validation battery\n";

    // gamma recurrence on a real log-spaced grid and complex samples
    {
        double worst = 0.0;
        for (double x = 0.1; x <= 30.0; x *= 1.31) {
            const Cx lhs = gamma(Cx(x + 1.0));
            const Cx rhs = Cx(x) * gamma(Cx(x));
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        for (int k = 0; k < 12; ++k) {
            const Cx z(0.2 + 3.0 * unit(rng), -2.0 + 4.0 * unit(rng));
            const Cx lhs = gamma(z + Cx(1.0));
            const Cx rhs = z * gamma(z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        bat.check("gamma recurrence", worst < 1e-12, worst);
    }

    // weighted-series identities against their closed forms
    {
        double worst = 0.0;
        for (double a : {0.5, 1.0, 1.5})
            for (double b : {0.5, 1.0, 2.0})
                for (double off : {1.5, 3.0, 6.0}) {
                    const HypergeometricParams p(Cx(a), Cx(b), a + b + 1.0 + off);
                    const double sa = weighted_series_sum(p, 1, 20000, true).value.real();
                    worst = std::max(worst, std::abs(sa - lemma_sum_a(p).real()));
                    const double sb = weighted_series_sum(p, 2, 20000, true).value.real();
                    worst = std::max(worst, std::abs(sb - lemma_sum_b(p).real()));
                    const double sg = weighted_series_sum(p, 0, 20000, true).value.real();
                    worst = std::max(worst, std::abs(sg - gauss_value(p).real()));
                }
        bat.check("series identities vs closed forms", worst < 1e-8, worst);
    }

    // operator factors against the defining integrals
    {
        double worst = 0.0;
        for (int trial = 0; trial < 12; ++trial) {
            const HarmonicMap f = random_polynomial(rng, 2 + trial % 9);
            const double a = -0.85 + 3.8 * unit(rng);
            OperatorParams p = OperatorParams::limit_infinity(a);
            if (trial % 3 == 0) {
                double b = -0.85 + 3.8 * unit(rng);
                if (std::abs(b - a) < 0.1) b += 0.25;
                p = OperatorParams::finite(a, b);
            } else if (trial % 3 == 1) {
                p = OperatorParams::equal_to_a(a);
            }
            const HarmonicMap image = apply_hab(p, f);
            for (int k = 0; k < 6; ++k) {
                const DiskPoint z(std::polar(0.85 * unit(rng), 6.28 * unit(rng)));
                worst = std::max(worst,
                                 std::abs(eval(image, z) - hab_integral_oracle(p, f, z)));
            }
        }
        bat.check("operator vs integral oracle", worst < 1e-8, worst);
    }

    // area bounds against quadrature of the Jacobian bounds
    {
        double worst = 0.0;
        const double q = 4.0 / std::sqrt(3.0);
        for (double r : {0.25, 0.5, 0.9})
            for (double b1 : {0.0, 0.5}) {
                const auto area = area_bounds(r, b1);
                const double pref = 2.0 * 3.14159265358979323846 * (1.0 - b1 * b1);
                const double up = pref * integrate(
                                             [&](double rho) {
                                                 return rho * std::pow(1.0 + rho, q - 2.0) /
                                                        std::pow(1.0 - rho, q + 2.0);
                                             },
                                             0.0, r);
                const double lo = pref * integrate(
                                             [&](double rho) {
                                                 return rho * std::pow(1.0 - rho, q - 2.0) /
                                                        std::pow(1.0 + rho, q + 2.0);
                                             },
                                             0.0, r);
                worst = std::max(worst, std::abs(up - area.second));
                worst = std::max(worst, std::abs(lo - area.first));
            }
        bat.check("area bounds vs quadrature", worst < 1e-8, worst);
    }

    // hierarchy: convex-test passers stay nonnegative down the chain
    {
        double worst_min = std::numeric_limits<double>::infinity();
        bool circles_ok = true;
        for (int trial = 0; trial < 8; ++trial) {
            const HarmonicMap f = random_uk_map(rng);
            if (!uk_sufficient(f).passed) continue;
            worst_min = std::min(worst_min,
                                 uniformly_convex_scan(f, GridSpec::pair_default(), threads)
                                     .min_residual);
            worst_min = std::min(
                worst_min,
                absolutely_convex_scan(f, GridSpec::pair_default(), threads).min_residual);
            worst_min = std::min(
                worst_min, fully_convex_scan(f, GridSpec::single_default(), threads).min_residual);
            for (int k = 0; k < 4; ++k) {
                const Cx center = std::polar(0.5 * unit(rng), 6.28 * unit(rng));
                const double radius = (1.0 - std::abs(center) - 0.02) * (0.2 + 0.7 * unit(rng));
                circles_ok = circles_ok &&
                             image_circle_convexity(f, DiskPoint(center), radius, 256);
            }
        }
        bat.check("hierarchy scans on sampled maps", worst_min >= -1e-8 && circles_ok, worst_min);
    }

    // transfer quadratic sweeps and the equal-parameter threshold
    {
        bool ok = true;
        for (double a = -0.9; a <= 5.0; a += 0.35)
            for (double b = -0.9; b <= 5.0; b += 0.35) {
                const bool cond = a * b <= 3.0 ||
                                  a * a * b * b - 4.0 * a * b - 2.0 * (a + b) <= 1.0;
                if (!cond) continue;
                for (int n = 2; n <= 100; ++n) ok = ok && phi(n, a, b) >= 0.0;
            }
        int argmin = 2;
        for (int n = 2; n <= 10000; ++n)
            if (psi(n) < psi(argmin)) argmin = n;
        ok = ok && argmin == 3;
        bat.check("transfer sweeps (phi grid, psi argmin)", ok, static_cast<double>(argmin));
    }

    // transfer and inverse compose to the identity on coefficients
    {
        double worst = 0.0;
        const HarmonicMap sampled = random_uk_map(rng);
        std::vector<Cx> gz = sampled.g().coeffs();
        gz[0] = Cx(0.0);  // inverse construction needs g'(0) = 0
        const HarmonicMap f(sampled.h().coeffs(), std::move(gz));
        const double a = 1.5;
        const HarmonicMap round =
            inverse_transfer(apply_hab(OperatorParams::limit_infinity(a), f), a);
        for (std::size_t n = 1; n <= f.truncation_order(); ++n) {
            worst = std::max(worst, std::abs(round.h().coeff(n) - f.h().coeff(n)));
            worst = std::max(worst, std::abs(round.g().coeff(n) - f.g().coeff(n)));
        }
        bat.check("transfer round-trip identity", worst < 1e-14, worst);
    }

    os << (bat.failures == 0 ? "all checks passed\n" : "FAILURES PRESENT\n");
    return bat.failures;
}

}  // namespace harmonic
