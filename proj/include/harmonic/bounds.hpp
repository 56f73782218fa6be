#pragma once

#include <utility>

#include "harmonic/errors.hpp"

namespace harmonic {

/// Closed-form growth, Jacobian and area envelopes for the absolutely
/// convex classes at radius r with |b1| = b1_mod, plus the covering
/// radius. All constants derive from sqrt(3) at runtime; nothing is a
/// hard-coded decimal.
struct BoundsReport {
    double r;
    double b1_mod;
    std::pair<double, double> growth;
    std::pair<double, double> jacobian;
    std::pair<double, double> area;
    double covering_radius;
};

enum class BoundFamily { ak };

/// Order of the family: sup |a2 - conj(b1) b2| / (1 - |b1|^2), which for
/// the absolutely convex class equals 2/sqrt(3). It doubles as the |a2|
/// bound of the b1 = 0 subclass.
double order_constant(BoundFamily family);

/// Modulus envelope C [1 - ((1-r)/(1+r))^p] <= |f(z)| <= C [((1+r)/(1-r))^p - 1]
/// with C = sqrt(3)/(sqrt(3)+4) and p = (sqrt(3)+4)/(2 sqrt(3)), 0 < r < 1.
/// The same envelope serves the b1 = 0 uniformly convex class: its |a2|
/// bound is smaller, but that class is not linearly invariant, so the
/// envelope cannot be tightened through renormalization.
std::pair<double, double> growth_bounds(double r);

/// sqrt(3)/(sqrt(3)+4): every map of the b1 = 0 class covers this disk.
/// Equals both C above and the r -> 1 limit of the growth lower bound.
double covering_radius();

/// (1-b1^2)(1-r)^{q-2}/(1+r)^{q+2} <= J <= (1-b1^2)(1+r)^{q-2}/(1-r)^{q+2}
/// with q = 4/sqrt(3), 0 <= r < 1, 0 <= b1_mod < 1.
std::pair<double, double> jacobian_bounds(double r, double b1_mod);

/// Area envelope of the image of |z| < r: the closed forms obtained by
/// integrating the Jacobian envelope over the disk, 0 < r < 1.
std::pair<double, double> area_bounds(double r, double b1_mod);

BoundsReport make_bounds_report(double r, double b1_mod);

}  // namespace harmonic
