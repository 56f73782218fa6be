#include "harmonic/bounds.hpp"

#include <cmath>

namespace harmonic {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_r_open(double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("radius must lie in (0, 1)");
}

void check_b1(double b1_mod) {
    if (!(b1_mod >= 0.0 && b1_mod < 1.0)) throw DomainError("|b1| must lie in [0, 1)");
}

}  // namespace

double order_constant(BoundFamily family) {
    switch (family) {
        case BoundFamily::ak:
            return 2.0 / std::sqrt(3.0);
    }
    throw DomainError("unknown bound family");
}

std::pair<double, double> growth_bounds(double r) {
    check_r_open(r);
    const double s3 = std::sqrt(3.0);
    const double c = s3 / (s3 + 4.0);
    const double p = (s3 + 4.0) / (2.0 * s3);
    const double lo = c * (1.0 - std::pow((1.0 - r) / (1.0 + r), p));
    const double hi = c * (std::pow((1.0 + r) / (1.0 - r), p) - 1.0);
    return {lo, hi};
}

double covering_radius() {
    const double s3 = std::sqrt(3.0);
    return s3 / (s3 + 4.0);
}

std::pair<double, double> jacobian_bounds(double r, double b1_mod) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
    check_b1(b1_mod);
    const double q = 4.0 / std::sqrt(3.0);
    const double a = 1.0 - b1_mod * b1_mod;
    const double lo = a * std::pow(1.0 - r, q - 2.0) / std::pow(1.0 + r, q + 2.0);
    const double hi = a * std::pow(1.0 + r, q - 2.0) / std::pow(1.0 - r, q + 2.0);
    return {lo, hi};
}

std::pair<double, double> area_bounds(double r, double b1_mod) {
    check_r_open(r);
    check_b1(b1_mod);
    const double s3 = std::sqrt(3.0);
    const double q = 4.0 / s3;
    const double pref = kPi * (1.0 - b1_mod * b1_mod) / 26.0;
    const double lo =
        pref * (3.0 - (3.0 * r * r + 8.0 * s3 * r + 3.0) *
                          std::pow(1.0 - r, q - 1.0) / std::pow(1.0 + r, q + 1.0));
    const double hi =
        pref * (3.0 - (3.0 * r * r - 8.0 * s3 * r + 3.0) *
                          std::pow(1.0 + r, q - 1.0) / std::pow(1.0 - r, q + 1.0));
    return {lo, hi};
}

BoundsReport make_bounds_report(double r, double b1_mod) {
    return {r,
            b1_mod,
            growth_bounds(r),
            jacobian_bounds(r, b1_mod),
            area_bounds(r, b1_mod),
            covering_radius()};
}

}  // namespace harmonic
