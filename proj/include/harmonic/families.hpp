#pragma once

#include <array>
#include <string>

#include "harmonic/series.hpp"
#include "harmonic/special.hpp"

namespace harmonic {

/// The three co-analytic shapes built from a hypergeometric series F:
///   f1: g(z) = (alpha/2) z F(z)
///   f2: g(z) = (alpha/2) (F(z) - 1)
///   f3: g(z) = (alpha/2) integral_0^z F
/// In every case h(z) = z.
enum class Family { f1, f2, f3 };

/// Data defining one family member. Parameters must sit in one of the two
/// admissible regimes: a, b real in (-1, inf) with ab > 0, or b = conj(a)
/// with a != 0. |alpha| < 1. truncation_order 0 requests the automatic
/// choice (1024 when the relevant condition sits near equality, else 256;
/// polynomial members use their exact degree).
struct HypergeometricSpec {
    HypergeometricParams params;
    Cx alpha;
    Family family;
    int truncation_order;

    HypergeometricSpec(HypergeometricParams p, Cx alpha_, Family fam, int trunc = 0);
};

enum class ConditionId {
    us_f1, us_f2, us_f3,       // sufficient for uniform starlikeness
    uk_f1, uk_f2, uk_f3,       // sufficient for uniform convexity
    poly_f1, poly_f2, poly_f3, // polynomial family variants (a = b = -m)
    quartic_example            // the m = 3 polynomial f3 special case
};

std::string condition_name(ConditionId id);

/// One evaluated admissibility inequality: satisfied iff
/// lhs_value <= threshold + 1e-12. lhs_value is strictly increasing in
/// |alpha| for every condition.
struct ConditionReport {
    ConditionId id;
    bool satisfied;
    double lhs_value;
    double threshold;
};

inline constexpr double kConditionSlack = 1e-12;

/// Truncated series of the requested family member.
HarmonicMap build_family(const HypergeometricSpec& spec);

/// Gamma-product inequality sufficient for the member to be uniformly
/// starlike. Domain: c > Re(a+b)+1 for f1/f2, c > Re(a+b) for f3.
ConditionReport starlike_condition(const HypergeometricSpec& spec);

/// Gamma-product inequality sufficient for the member to be uniformly
/// convex. Domain: c > Re(a+b)+2 for f1/f2, c > Re(a+b)+1 for f3.
ConditionReport convex_condition(const HypergeometricSpec& spec);

/// For the a = 1 slice with b, c real: the smallest c guaranteeing the
/// starlike condition of each family at the given alpha.
struct CThresholds {
    double f1_min_c;  // quadratic-root threshold for f1
    double f2_min_c;  // quadratic-root threshold for f2
    double f3_min_c;  // 1 + b/(1 - |alpha|) for f3
};
CThresholds c_thresholds_a1(double b, Cx alpha);

/// Polynomial members at a = b = -m, m a positive integer: the three
/// starlike conditions as Gamma-ratio inequalities against threshold 1.
std::array<ConditionReport, 3> polynomial_conditions(int m, double c, Cx alpha);

/// The matching polynomial built from binomial coefficients
/// binom(m,n) (m-n+1)_n / (c)_n; agrees termwise with
/// build_family(a = b = -m).
HarmonicMap polynomial_map(Family fam, int m, double c, Cx alpha);

/// Degree-4 polynomial f3 member at m = 3: satisfied iff
/// |alpha| (60 + 47c + 12c^2 + c^3) <= 2c + 3c^2 + c^3. Requires
/// 0 < |alpha| < 1.
ConditionReport quartic_example_condition(double c, Cx alpha);
HarmonicMap quartic_example_map(double c, Cx alpha);

/// Estimate of the coefficient mass the truncation drops from the convex
/// test's weighted sum, computed by extending the term recurrence.
double family_tail_estimate(const HypergeometricSpec& spec);

/// 1024 when the starlike or convex condition value is within 10% of its
/// threshold, else 256.
int recommended_truncation(const HypergeometricSpec& spec);

}  // namespace harmonic
