#include <doctest.h>

#include <cmath>
#include <random>

#include "harmonic/series.hpp"
#include "oracles.hpp"

using namespace harmonic;

namespace {

// z + conj(z^2 / 6): the boundary case of the convex coefficient test.
HarmonicMap sharp_map() {
    return HarmonicMap({Cx(1.0), Cx(0.0)}, {Cx(0.0), Cx(1.0 / 6.0)});
}

HarmonicMap truncated_half_plane(std::size_t order) {
    std::vector<Cx> hc(order, Cx(1.0));  // z/(1-z) = z + z^2 + ...
    return HarmonicMap(std::move(hc), std::vector<Cx>(order, Cx(0.0)));
}

std::mt19937_64 rng(20240811ULL);

Cx random_disk_point(double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(rmax * std::sqrt(u(rng)), 6.283185307179586 * u(rng));
}

HarmonicMap random_map(int degree, double scale) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Cx> hc(degree), gc(degree);
    hc[0] = Cx(1.0);
    gc[0] = 0.3 * Cx(u(rng), u(rng));
    for (int n = 1; n < degree; ++n) {
        hc[n] = scale * Cx(u(rng), u(rng)) / double((n + 1) * (n + 1));
        gc[n] = scale * Cx(u(rng), u(rng)) / double((n + 1) * (n + 1));
    }
    return HarmonicMap(std::move(hc), std::move(gc));
}

}  // namespace

TEST_CASE("disk point rejects the boundary") {
    CHECK_NOTHROW(DiskPoint(Cx(0.99, 0.0)));
    CHECK_THROWS_AS(DiskPoint(Cx(1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(DiskPoint(Cx(0.8, 0.8)), DomainError);
}

TEST_CASE("coefficients must be finite") {
    CHECK_THROWS_AS(ComplexCoeffSeq({Cx(1.0), Cx(std::nan(""), 0.0)}), DomainError);
}

TEST_CASE("eval: identity, sharp map, affine map") {
    const HarmonicMap id = HarmonicMap::identity();
    CHECK(eval(id, DiskPoint(Cx(0.3, 0.4))) == Cx(0.3, 0.4));

    const HarmonicMap f = sharp_map();
    CHECK(eval(f, DiskPoint(Cx(0.5))).real() == doctest::Approx(0.5 + 1.0 / 24.0).epsilon(1e-15));
    CHECK(eval(f, DiskPoint(Cx(0.5))).imag() == doctest::Approx(0.0));

    const HarmonicMap aff({Cx(1.0)}, {Cx(0.5)});  // z + 0.5 conj(z)
    const Cx w = eval(aff, DiskPoint(Cx(0.0, 0.2)));
    CHECK(w.real() == doctest::Approx(0.0));
    CHECK(w.imag() == doctest::Approx(0.1));
}

TEST_CASE("derivatives: termwise values and finite-difference consistency") {
    const HarmonicMap id = HarmonicMap::identity();
    const Derivatives d0 = derivatives(id, DiskPoint(Cx(0.3, -0.2)));
    CHECK(d0.hp == Cx(1.0));
    CHECK(d0.hpp == Cx(0.0));
    CHECK(d0.gp == Cx(0.0));
    CHECK(d0.gpp == Cx(0.0));

    const HarmonicMap f = sharp_map();
    const Derivatives ds = derivatives(f, DiskPoint(Cx(0.0)));
    CHECK(ds.hp == Cx(1.0));
    CHECK(ds.gp == Cx(0.0));
    CHECK(ds.gpp.real() == doctest::Approx(1.0 / 3.0));

    const HarmonicMap hp = truncated_half_plane(200);
    CHECK(derivatives(hp, DiskPoint(Cx(0.5))).hp.real() == doctest::Approx(4.0).epsilon(1e-6));

    // h' and g' against central differences of the parts
    for (int trial = 0; trial < 20; ++trial) {
        const HarmonicMap m = random_map(12, 0.5);
        const Cx z = random_disk_point(0.7);
        const Derivatives d = derivatives(m, DiskPoint(z));
        const Cx hd = oracles::central_diff([&](Cx w) { return m.h().eval(w); }, z, Cx(1.0), 1e-4);
        const Cx gd = oracles::central_diff([&](Cx w) { return m.g().eval(w); }, z, Cx(1.0), 1e-4);
        CHECK(std::abs(d.hp - hd) < 1e-5 * std::max(1.0, std::abs(d.hp)));
        CHECK(std::abs(d.gp - gd) < 1e-5 * std::max(1.0, std::abs(d.gp)));
    }
}

TEST_CASE("finite differences of eval recover the directional derivatives") {
    // f = h + conj(g) is not holomorphic; the axis-direction differences
    // of eval give h' + conj(g') and h' - conj(g')
    const double step = 1e-4;
    for (int trial = 0; trial < 15; ++trial) {
        const HarmonicMap m = random_map(10, 0.5);
        const Cx z = random_disk_point(0.7);
        const Derivatives d = derivatives(m, DiskPoint(z));
        auto f = [&](Cx w) { return eval(m, DiskPoint(w)); };
        const Cx dx = (f(z + Cx(step)) - f(z - Cx(step))) / (2.0 * step);
        const Cx dy = (f(z + Cx(0.0, step)) - f(z - Cx(0.0, step))) / (Cx(0.0, 2.0 * step));
        CHECK(std::abs(dx - (d.hp + std::conj(d.gp))) < 1e-5 * std::max(1.0, std::abs(dx)));
        CHECK(std::abs(dy - (d.hp - std::conj(d.gp))) < 1e-5 * std::max(1.0, std::abs(dy)));
    }
}

TEST_CASE("jacobian values") {
    const HarmonicMap aff({Cx(1.0)}, {Cx(0.5)});
    for (double r : {0.1, 0.5, 0.8}) {
        CHECK(jacobian(aff, DiskPoint(Cx(r, 0.1))) == doctest::Approx(0.75));
    }
    CHECK(jacobian(HarmonicMap::identity(), DiskPoint(Cx(0.6, 0.3))) == doctest::Approx(1.0));
    CHECK(jacobian(sharp_map(), DiskPoint(Cx(0.6))) == doctest::Approx(0.96));
}

TEST_CASE("jacobian of z + c conj(z) is constantly 1 - |c|^2") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const Cx c = std::polar(0.9 * u(rng), 6.28 * u(rng));
        const HarmonicMap aff({Cx(1.0)}, {c});
        const double expected = 1.0 - std::norm(c);
        for (int k = 0; k < 5; ++k) {
            CHECK(jacobian(aff, DiskPoint(random_disk_point(0.9))) ==
                  doctest::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("koebe transform of the identity is the Mobius coefficient sequence") {
    const double a = 0.3;
    const HarmonicMap f = koebe_transform(HarmonicMap::identity(), DiskPoint(Cx(a)), 0.0);
    // z/(1 + a z) has coefficients (-a)^{n-1}
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(std::abs(f.h().coeff(n) - std::pow(Cx(-a), double(n - 1))) < 1e-14);
        CHECK(std::abs(f.g().coeff(n)) < 1e-14);
    }
}

TEST_CASE("koebe transform with a = 0 is the identity automorphism") {
    const HarmonicMap f = random_map(16, 0.4);
    const HarmonicMap t = koebe_transform(f, DiskPoint(Cx(0.0)), 0.0);
    for (std::size_t n = 1; n <= 16; ++n) {
        CHECK(std::abs(t.h().coeff(n) - f.h().coeff(n)) < 1e-13);
        CHECK(std::abs(t.g().coeff(n) - f.g().coeff(n)) < 1e-13);
    }
}

TEST_CASE("koebe transform agrees with the defining quotient pointwise") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        const HarmonicMap f = trial == 0 ? sharp_map() : random_map(8 + 4 * trial, 0.5);
        const Cx a = (trial == 0) ? Cx(0.2) : random_disk_point(0.5);
        const double theta = (trial == 0) ? 0.0 : 6.28 * u(rng);
        const HarmonicMap t = koebe_transform(f, DiskPoint(a), theta);

        const Cx eit = std::polar(1.0, theta);
        const Cx b = a * eit;
        const Cx d = (1.0 - std::norm(a)) * f.h().eval_d1(b) * eit;
        for (int k = 0; k < 20; ++k) {
            const Cx z = random_disk_point(0.6);
            const Cx mz = eit * (z + a) / (Cx(1.0) + std::conj(a) * z);
            const Cx expected = (eval(f, DiskPoint(mz)) - eval(f, DiskPoint(b))) / d;
            CHECK(std::abs(eval(t, DiskPoint(z)) - expected) < 1e-8);
        }
    }
}

TEST_CASE("koebe transform rejects degenerate derivative") {
    // h'(z) = 1 - 2z vanishes at 0.5
    HarmonicMap f({Cx(1.0), Cx(-1.0)}, {Cx(0.0), Cx(0.0)});
    CHECK_THROWS_AS(koebe_transform(f, DiskPoint(Cx(0.5)), 0.0), DegenerateDerivativeError);
}

TEST_CASE("affine transform: trivial cases and the worked example") {
    const HarmonicMap id = HarmonicMap::identity();
    const HarmonicMap t = affine_transform(id, Cx(0.5));
    CHECK(t.h().coeff(1) == Cx(1.0));
    CHECK(t.g().coeff(1) == Cx(0.5));

    const HarmonicMap f = sharp_map();
    const HarmonicMap same = affine_transform(f, Cx(0.0));
    CHECK(std::abs(same.g().coeff(2) - f.g().coeff(2)) < 1e-15);

    // direct formula check at sample points for c = 0.3
    const Cx c(0.3);
    const HarmonicMap a = affine_transform(f, c);
    for (int k = 0; k < 20; ++k) {
        const Cx z = random_disk_point(0.8);
        const Cx fv = eval(f, DiskPoint(z));
        const Cx expected = (fv + c * std::conj(fv)) / (Cx(1.0) + c * f.b1());
        CHECK(std::abs(eval(a, DiskPoint(z)) - expected) < 1e-10);
    }
}

TEST_CASE("affine transform inverts with the adjusted parameter") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const HarmonicMap f = random_map(10, 0.5);
        const Cx c = std::polar(0.7 * u(rng), 6.28 * u(rng));
        const Cx s = Cx(1.0) + c * f.b1();
        const Cx c_inv = -c * std::conj(s) / s;
        const HarmonicMap round = affine_transform(affine_transform(f, c), c_inv);
        for (int k = 0; k < 5; ++k) {
            const Cx z = random_disk_point(0.8);
            CHECK(std::abs(eval(round, DiskPoint(z)) - eval(f, DiskPoint(z))) < 1e-10);
        }
    }
}

TEST_CASE("affine transform rejects |c| >= 1 and singular normalization") {
    const HarmonicMap f = random_map(4, 0.3);
    CHECK_THROWS_AS(affine_transform(f, Cx(1.0)), DomainError);
    // b1 = -0.999..., c close to 1/0.999... makes 1 + c b1 vanish
    HarmonicMap g({Cx(1.0)}, {Cx(-0.9999999999999)});
    CHECK_THROWS_AS(affine_transform(g, Cx(0.9999999999999)), SingularNormalizationError);
}
