#pragma once

#include <optional>
#include <utility>

#include "harmonic/class_tests.hpp"
#include "harmonic/series.hpp"

namespace harmonic {

/// Parameters of the coefficient-scaling integral transform. The finite
/// form scales the n-th coefficient by (a+1)(b+1)/((a+n)(b+n)); the two
/// limits b -> infinity and b -> a scale by (a+1)/(a+n) and its square.
struct OperatorParams {
    enum class Kind { finite, limit_infinity, equal_to_a };

    double a;
    Kind kind;
    double b;  // meaningful only for Kind::finite

    static OperatorParams finite(double a, double b);
    static OperatorParams limit_infinity(double a);
    static OperatorParams equal_to_a(double a);

private:
    OperatorParams(double a_, Kind k, double b_) : a(a_), kind(k), b(b_) {}
};

/// Which sufficient rule admitted (or failed to admit) a starlike-to-
/// convex transfer.
enum class TransferRule {
    product_bound,    // ab <= 3
    quartic_bound,    // ab > 3 and a^2 b^2 - 4ab - 2(a+b) <= 1
    floor_match,      // real roots of the transfer quadratic share a floor
    bernardi_limit,   // b -> infinity case, a <= 0
    equal_params,     // b = a case, a <= psi(3)
    none
};

/// Admissibility verdict for a transfer. phi_min_over_n is the smallest
/// value of the transfer quadratic phi over the integer range covering
/// its vertex (for the two limit kinds, of the analogous margin
/// 2(a+n) - (a+1)(2n-1) resp. 2(a+n)^2 - (a+1)^2(2n-1), n in [2, 100]).
/// roots holds the real roots of phi, larger first, when they exist.
struct TransferVerdict {
    TransferRule rule = TransferRule::none;
    bool admissible = false;
    double phi_min_over_n = 0.0;
    std::optional<std::pair<double, double>> roots;
};

/// Coefficient scaling factor applied to the n-th coefficient (n >= 1).
double hab_factor(const OperatorParams& p, int n);

/// Applies the transform coefficientwise to both parts of f. The n = 1
/// factor is 1, so normalization and b1 are preserved.
HarmonicMap apply_hab(const OperatorParams& p, const HarmonicMap& f);

/// Numerical quadrature of the defining integrals, for cross-checking
/// apply_hab. Accepts polynomial maps of degree at most 64. The endpoint
/// weight t^{a-1} (and the log weight of the b -> a case) is regularized
/// by a power substitution before adaptive integration.
Cx hab_integral_oracle(const OperatorParams& p, const HarmonicMap& f, DiskPoint z);

/// Transfer quadratic phi(n) = 2n^2 - 2(1+ab)n + (3ab + a + b + 1);
/// phi(n) >= 0 for all integers n >= 2 makes the transfer admissible.
double phi(double n, double a, double b);

/// psi(n) = (sqrt(2) n - sqrt(2n-1)) / (sqrt(2n-1) - sqrt(2)), n >= 2:
/// the b = a admissibility threshold; its minimum over n is at n = 3.
double psi(int n);

/// Evaluates the admissibility rules for finite (a, b), both > -1:
/// the product bound, the quartic bound, and the floor-match fallback
/// (which additionally verifies phi(n) >= 0 on the integers up to just
/// past the larger root before declaring admissibility).
TransferVerdict transfer_condition(double a, double b);

/// Admissible parameter ranges of the two limit kinds: a <= 0 for
/// b -> infinity, a <= psi(3) for b = a.
enum class SpecialCase { b_infinity, a_equals_b };
bool special_case_ranges(SpecialCase which, double a);

/// Applies the transform to a map satisfying the starlike coefficient
/// test (HypothesisError otherwise) and reports which rule, if any,
/// guarantees the image satisfies the convex coefficient test.
std::pair<HarmonicMap, TransferVerdict> transfer_us_to_uk(const HarmonicMap& f,
                                                          const OperatorParams& p);

/// Inverse construction: scales the n-th coefficient of both parts by
/// (a+n)/(a+1), a >= 1. Requires b1 = 0 and the convex coefficient test
/// to hold (HypothesisError otherwise); the image then satisfies the
/// starlike test.
HarmonicMap inverse_transfer(const HarmonicMap& f, double a);

}  // namespace harmonic
