#pragma once

#include <vector>

#include "harmonic/series.hpp"

namespace harmonic {

/// Polar sampling grid: radial_count radii uniform in r^2 up to
/// max_radius, times angular_count equally spaced angles. The origin is
/// never a grid point (scans that need it add it explicitly).
struct GridSpec {
    int radial_count = 24;
    int angular_count = 48;
    double max_radius = 0.95;

    GridSpec() = default;
    GridSpec(int radial, int angular, double max_r = 0.95);

    static GridSpec single_default() { return GridSpec(24, 48); }
    static GridSpec pair_default() { return GridSpec(12, 24); }

    std::vector<Cx> points() const;
};

/// Result of a grid scan. A pass is evidence within grid resolution, not
/// a proof; a fail carries the witness pair. pass holds exactly when
/// min_residual cleared the scan's tolerance (and, for the starlike scan,
/// the zeta = 0 slice stayed strictly positive).
struct OracleReport {
    double min_residual = 0.0;
    Cx argmin_z;
    Cx argmin_zeta;
    bool pass = false;
    long samples = 0;
};

inline constexpr double kScanTol = 1e-9;
inline constexpr double kStrictSliceTol = 1e-12;

/// Two-point convexity functional
///   P(z, zeta) = [(z-zeta)h'(z) + (z-zeta)^2 h''(z)
///                 + conj((z-zeta)g'(z)) + conj((z-zeta)^2 g''(z))]
///                / [(z-zeta)h'(z) - conj((z-zeta)g'(z))].
/// Re P >= 0 on all pairs characterizes uniform convexity.
Cx p_functional(const HarmonicMap& f, DiskPoint z, DiskPoint zeta);

/// min Re P(z, zeta) over distinct grid pairs; pass iff >= -1e-9.
/// Requires jacobian > 0 at every grid point (SensePreservationError
/// with witness otherwise).
OracleReport uniformly_convex_scan(const HarmonicMap& f,
                                   const GridSpec& grid = GridSpec::pair_default(),
                                   int threads = 1);

/// min over pairs of Re{ (f(z)-f(zeta)) /
///   [(z-zeta) f_z(z) - conj(z-zeta) f_zbar(z)] }, zeta ranging over the
/// grid plus the origin. pass iff the minimum >= -1e-9 and the zeta = 0
/// slice is strictly positive (> 1e-12).
OracleReport uniformly_starlike_scan(const HarmonicMap& f,
                                     const GridSpec& grid = GridSpec::pair_default(),
                                     int threads = 1);

/// Pointwise full-convexity residual at z (criterion LHS minus RHS):
///   |z|^2 Re{ conj(h')(h' + z h'') - conj(g')(g' + z g'') }
///   - Re{ z^3 (h'' g' - h' g'') }.
/// f is fully convex iff this is >= 0 throughout the disk. The g-part is
/// expanded division-free, so zeros of g' are harmless.
double fully_convex_residual(const HarmonicMap& f, DiskPoint z);

/// Pointwise absolute-convexity residual at (zeta, b):
///   (|h'|^2 - |g'|^2)(1 + |b|^2 - 2 Re(conj(b) zeta))
///   + Re{ (zeta-b)(1-zeta conj(b)) (h'' conj(h') - g'' conj(g')) }
///   - Re{ (zeta-b)^3 (1-zeta conj(b))^3 (h'' g' - h' g'') }
///       / (|zeta-b|^2 |1-zeta conj(b)|^2),
/// with the last term set to 0 at zeta = b (removable). f is absolutely
/// convex iff this is >= 0 for all zeta, b in the disk.
double absolutely_convex_residual(const HarmonicMap& f, DiskPoint zeta, DiskPoint b);

/// Grid minimum of fully_convex_residual. Requires jacobian > 0 on grid.
OracleReport fully_convex_scan(const HarmonicMap& f,
                               const GridSpec& grid = GridSpec::single_default(),
                               int threads = 1);

/// Grid minimum of absolutely_convex_residual over (zeta, b) pairs.
OracleReport absolutely_convex_scan(const HarmonicMap& f,
                                    const GridSpec& grid = GridSpec::pair_default(),
                                    int threads = 1);

/// Discrete convexity of the image of the circle |z - center| = radius:
/// samples the image polyline, checks that successive edge cross products
/// keep one sign (tolerance -1e-10 relative to the edge-length scale) and
/// that the total turning is one full revolution. The verdict comes from
/// the polyline itself; it is meaningful evidence only where f is
/// sense-preserving, which the caller is expected to ensure.
bool image_circle_convexity(const HarmonicMap& f, DiskPoint center, double radius,
                            int samples = 256);

}  // namespace harmonic
