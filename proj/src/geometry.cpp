#include "harmonic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace harmonic {

namespace {

constexpr double kDenomTol = 1e-14;
constexpr double kTwoPi = 6.283185307179586476925286766559;

struct PointData {
    Cx z;
    Cx f;  // filled only when the scan needs values
    Derivatives d;
};

std::vector<PointData> precompute(const HarmonicMap& f, const std::vector<Cx>& pts,
                                  bool with_values) {
    std::vector<PointData> out;
    out.reserve(pts.size());
    for (Cx z : pts) {
        DiskPoint p(z);
        const double j = jacobian(f, p);
        if (!(j > 0.0)) throw SensePreservationError(z, j);
        PointData pd;
        pd.z = z;
        pd.d = derivatives(f, p);
        if (with_values) pd.f = eval(f, p);
        out.push_back(pd);
    }
    return out;
}

struct MinCell {
    double value = std::numeric_limits<double>::infinity();
    long index = -1;
};

// Deterministic min-reduction over [0, count): workers scan contiguous
// chunks, ties resolve to the lowest index, worker exceptions are
// rethrown on the calling thread. The result matches a sequential scan
// for any thread count.
template <class Fn>
MinCell parallel_min(long count, int threads, Fn&& residual_at) {
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, hw));
    auto scan_chunk = [&residual_at](long lo, long hi) {
        MinCell best;
        for (long i = lo; i < hi; ++i) {
            const double v = residual_at(i);
            if (best.index < 0 || v < best.value) {
                best.value = v;
                best.index = i;
            }
        }
        return best;
    };
    if (threads <= 1 || count < 4096) return scan_chunk(0, count);

    std::vector<MinCell> cells(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                cells[t] = scan_chunk(t * chunk, std::min(count, (t + 1) * chunk));
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    MinCell best;
    for (const MinCell& c : cells) {
        if (c.index < 0) continue;
        if (best.index < 0 || c.value < best.value) best = c;
    }
    return best;
}

Cx p_numerator(const Derivatives& d, Cx w) {
    return w * d.hp + w * w * d.hpp + std::conj(w * d.gp) + std::conj(w * w * d.gpp);
}

Cx p_denominator(const Derivatives& d, Cx w) {
    return w * d.hp - std::conj(w * d.gp);
}

double fc_residual(const Derivatives& d, Cx z) {
    const double lead =
        (std::conj(d.hp) * (d.hp + z * d.hpp) - std::conj(d.gp) * (d.gp + z * d.gpp)).real();
    const double mixed = (z * z * z * (d.hpp * d.gp - d.hp * d.gpp)).real();
    return std::norm(z) * lead - mixed;
}

double ak_residual(const Derivatives& d, Cx zeta, Cx b) {
    const Cx u = (zeta - b) * (Cx(1.0) - zeta * std::conj(b));
    const double base = 1.0 + std::norm(b) - 2.0 * (std::conj(b) * zeta).real();
    const double j = std::norm(d.hp) - std::norm(d.gp);
    double res = j * base + (u * (d.hpp * std::conj(d.hp) - d.gpp * std::conj(d.gp))).real();
    const double u2 = std::norm(zeta - b) * std::norm(Cx(1.0) - zeta * std::conj(b));
    if (u2 > 0.0) res -= (u * u * u * (d.hpp * d.gp - d.hp * d.gpp)).real() / u2;
    return res;
}

}  // namespace

GridSpec::GridSpec(int radial, int angular, double max_r)
    : radial_count(radial), angular_count(angular), max_radius(max_r) {
    if (radial_count < 4) throw DomainError("grid needs at least 4 radii");
    if (angular_count < 8) throw DomainError("grid needs at least 8 angles");
    if (!(max_radius > 0.0 && max_radius < 1.0))
        throw DomainError("grid max_radius must lie in (0, 1)");
}

std::vector<Cx> GridSpec::points() const {
    std::vector<Cx> pts;
    pts.reserve(static_cast<std::size_t>(radial_count) * angular_count);
    for (int i = 1; i <= radial_count; ++i) {
        const double r = max_radius * std::sqrt(static_cast<double>(i) / radial_count);
        for (int j = 0; j < angular_count; ++j) {
            pts.push_back(std::polar(r, kTwoPi * j / angular_count));
        }
    }
    return pts;
}

Cx p_functional(const HarmonicMap& f, DiskPoint z, DiskPoint zeta) {
    const Cx w = z.value() - zeta.value();
    if (std::abs(w) <= kDenomTol)
        throw CoincidentPointsError("p_functional requires z != zeta");
    const Derivatives d = derivatives(f, z);
    const Cx den = p_denominator(d, w);
    if (std::abs(den) <= kDenomTol)
        throw VanishingDenominatorError(z.value(), zeta.value());
    return p_numerator(d, w) / den;
}

OracleReport uniformly_convex_scan(const HarmonicMap& f, const GridSpec& grid, int threads) {
    const std::vector<PointData> data = precompute(f, grid.points(), false);
    const long n = static_cast<long>(data.size());
    const long total = n * n;

    auto residual = [&](long idx) {
        const long zi = idx / n, ji = idx % n;
        if (zi == ji) return std::numeric_limits<double>::infinity();
        const PointData& pz = data[zi];
        const Cx w = pz.z - data[ji].z;
        const Cx den = p_denominator(pz.d, w);
        if (std::abs(den) <= kDenomTol) throw VanishingDenominatorError(pz.z, data[ji].z);
        return (p_numerator(pz.d, w) / den).real();
    };
    const MinCell best = parallel_min(total, threads, residual);

    OracleReport rep;
    rep.min_residual = best.value;
    rep.argmin_z = data[best.index / n].z;
    rep.argmin_zeta = data[best.index % n].z;
    rep.samples = total - n;
    rep.pass = best.value >= -kScanTol;
    return rep;
}

OracleReport uniformly_starlike_scan(const HarmonicMap& f, const GridSpec& grid, int threads) {
    std::vector<Cx> zeta_pts = grid.points();
    zeta_pts.insert(zeta_pts.begin(), Cx(0.0));
    const std::vector<PointData> zs = precompute(f, grid.points(), true);
    const std::vector<PointData> zetas = precompute(f, zeta_pts, true);
    const long nz = static_cast<long>(zs.size());
    const long nzeta = static_cast<long>(zetas.size());
    const long total = nz * nzeta;

    auto residual = [&](long idx) {
        const PointData& pz = zs[idx / nzeta];
        const PointData& pj = zetas[idx % nzeta];
        const Cx w = pz.z - pj.z;
        if (std::abs(w) <= kDenomTol) return std::numeric_limits<double>::infinity();
        const Cx den = w * pz.d.hp - std::conj(w) * std::conj(pz.d.gp);
        if (std::abs(den) <= kDenomTol) throw VanishingDenominatorError(pz.z, pj.z);
        return ((pz.f - pj.f) / den).real();
    };
    const MinCell best = parallel_min(total, threads, residual);

    // zeta = 0 occupies slot 0 of the zeta list.
    const MinCell slice = parallel_min(nz, 1, [&](long zi) { return residual(zi * nzeta); });

    OracleReport rep;
    rep.min_residual = best.value;
    rep.argmin_z = zs[best.index / nzeta].z;
    rep.argmin_zeta = zetas[best.index % nzeta].z;
    rep.samples = total - nz;  // each z coincides with itself once in the zeta list
    rep.pass = best.value >= -kScanTol && slice.value > kStrictSliceTol;
    return rep;
}

double fully_convex_residual(const HarmonicMap& f, DiskPoint z) {
    const Derivatives d = derivatives(f, z);
    const double j = std::norm(d.hp) - std::norm(d.gp);
    if (!(j > 0.0)) throw SensePreservationError(z.value(), j);
    return fc_residual(d, z.value());
}

double absolutely_convex_residual(const HarmonicMap& f, DiskPoint zeta, DiskPoint b) {
    const Derivatives d = derivatives(f, zeta);
    const double j = std::norm(d.hp) - std::norm(d.gp);
    if (!(j > 0.0)) throw SensePreservationError(zeta.value(), j);
    return ak_residual(d, zeta.value(), b.value());
}

OracleReport fully_convex_scan(const HarmonicMap& f, const GridSpec& grid, int threads) {
    const std::vector<PointData> data = precompute(f, grid.points(), false);
    const long n = static_cast<long>(data.size());

    const MinCell best =
        parallel_min(n, threads, [&](long i) { return fc_residual(data[i].d, data[i].z); });

    OracleReport rep;
    rep.min_residual = best.value;
    rep.argmin_z = data[best.index].z;
    rep.argmin_zeta = data[best.index].z;
    rep.samples = n;
    rep.pass = best.value >= -kScanTol;
    return rep;
}

OracleReport absolutely_convex_scan(const HarmonicMap& f, const GridSpec& grid, int threads) {
    const std::vector<PointData> data = precompute(f, grid.points(), false);
    const long n = static_cast<long>(data.size());
    const long total = n * n;

    auto residual = [&](long idx) {
        const PointData& pz = data[idx / n];
        return ak_residual(pz.d, pz.z, data[idx % n].z);
    };
    const MinCell best = parallel_min(total, threads, residual);

    OracleReport rep;
    rep.min_residual = best.value;
    rep.argmin_z = data[best.index / n].z;
    rep.argmin_zeta = data[best.index % n].z;
    rep.samples = total;
    rep.pass = best.value >= -kScanTol;
    return rep;
}

bool image_circle_convexity(const HarmonicMap& f, DiskPoint center, double radius, int samples) {
    if (samples < 64) throw DomainError("circle convexity check needs at least 64 samples");
    if (!(radius > 0.0) || std::abs(center.value()) + radius >= 1.0)
        throw DomainError("circle must lie inside the unit disk");

    std::vector<Cx> img(samples);
    for (int k = 0; k < samples; ++k) {
        const Cx z = center.value() + std::polar(radius, kTwoPi * k / samples);
        img[k] = eval(f, DiskPoint(z));
    }

    std::vector<Cx> edge(samples);
    double max_edge = 0.0, max_img = 0.0;
    for (int k = 0; k < samples; ++k) {
        edge[k] = img[(k + 1) % samples] - img[k];
        max_edge = std::max(max_edge, std::abs(edge[k]));
        max_img = std::max(max_img, std::abs(img[k]));
    }
    if (max_edge <= 1e-14 * (1.0 + max_img))
        throw DegeneratePolylineError("image polyline collapsed to a point");
    for (int k = 0; k < samples; ++k) {
        if (std::abs(edge[k]) < 1e-13 * max_edge)
            throw DegeneratePolylineError("repeated image points on sampled circle");
    }

    // Successive-edge cross products must share one sign and the turning
    // angles must add to a single revolution.
    double turning = 0.0;
    int pos = 0, neg = 0;
    std::vector<double> crosses(samples), scales(samples);
    for (int k = 0; k < samples; ++k) {
        const Cx e0 = edge[k];
        const Cx e1 = edge[(k + 1) % samples];
        const double cross = e0.real() * e1.imag() - e0.imag() * e1.real();
        const double dot = e0.real() * e1.real() + e0.imag() * e1.imag();
        crosses[k] = cross;
        scales[k] = std::abs(e0) * std::abs(e1);
        turning += std::atan2(cross, dot);
        if (cross > 0) ++pos;
        if (cross < 0) ++neg;
    }
    const double orient = (pos >= neg) ? 1.0 : -1.0;
    for (int k = 0; k < samples; ++k) {
        if (orient * crosses[k] < -1e-10 * scales[k]) return false;
    }
    return std::abs(std::abs(turning) - kTwoPi) < 0.5;
}

}  // namespace harmonic
