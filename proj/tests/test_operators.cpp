#include <doctest.h>

#include <cmath>
#include <random>

#include "harmonic/operators.hpp"

using namespace harmonic;

namespace {

std::mt19937_64 rng(43210987ULL);

HarmonicMap random_polynomial(int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Cx> hc(degree), gc(degree);
    hc[0] = Cx(1.0);
    gc[0] = 0.3 * Cx(u(rng), u(rng));
    for (int n = 1; n < degree; ++n) {
        hc[n] = Cx(u(rng), u(rng)) / double((n + 1) * (n + 1));
        gc[n] = Cx(u(rng), u(rng)) / double((n + 1) * (n + 1));
    }
    return HarmonicMap(std::move(hc), std::move(gc));
}

Cx random_disk_point(double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(rmax * std::sqrt(u(rng)), 6.283185307179586 * u(rng));
}

}  // namespace

TEST_CASE("factor values") {
    CHECK(hab_factor(OperatorParams::finite(0.7, 2.2), 1) == doctest::Approx(1.0));
    CHECK(hab_factor(OperatorParams::limit_infinity(1.3), 1) == doctest::Approx(1.0));
    CHECK(hab_factor(OperatorParams::equal_to_a(2.0), 1) == doctest::Approx(1.0));

    CHECK(hab_factor(OperatorParams::limit_infinity(0.0), 4) == doctest::Approx(0.25));
    CHECK(hab_factor(OperatorParams::finite(1.0, 2.0), 3) == doctest::Approx(0.3));
    CHECK(hab_factor(OperatorParams::equal_to_a(1.0), 2) == doctest::Approx(4.0 / 9.0));
}

TEST_CASE("factor limits interpolate") {
    const double a = 0.8;
    for (int n : {2, 5, 17}) {
        const double big_b = hab_factor(OperatorParams::finite(a, 1e6), n);
        const double limit = hab_factor(OperatorParams::limit_infinity(a), n);
        CHECK(std::abs(big_b - limit) / limit < 1e-3);

        const double near_a = hab_factor(OperatorParams::finite(a, a + 1e-9), n);
        const double equal = hab_factor(OperatorParams::equal_to_a(a), n);
        CHECK(near_a == doctest::Approx(equal).epsilon(1e-6));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(OperatorParams::finite(-1.0, 2.0), DomainError);
    CHECK_THROWS_AS(OperatorParams::finite(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(OperatorParams::limit_infinity(-1.2), DomainError);
}

TEST_CASE("integral oracle: identity map is fixed for any parameters") {
    const HarmonicMap id = HarmonicMap::identity();
    for (const OperatorParams& p : {OperatorParams::finite(0.5, 2.0),
                                    OperatorParams::limit_infinity(-0.5),
                                    OperatorParams::equal_to_a(1.5)}) {
        for (int k = 0; k < 5; ++k) {
            const Cx z = random_disk_point(0.9);
            CHECK(std::abs(hab_integral_oracle(p, id, DiskPoint(z)) - z) < 1e-10);
        }
    }
}

TEST_CASE("integral oracle: monomial worked examples") {
    // z^3 with (a, b) = (1, 2): factor (2*3)/(4*5) = 0.3
    HarmonicMap cubic({Cx(0.0), Cx(0.0), Cx(1.0)}, {Cx(0.0), Cx(0.0), Cx(0.0)});
    const OperatorParams p12 = OperatorParams::finite(1.0, 2.0);
    for (int k = 0; k < 5; ++k) {
        const Cx z = random_disk_point(0.9);
        CHECK(std::abs(hab_integral_oracle(p12, cubic, DiskPoint(z)) - 0.3 * z * z * z) < 1e-9);
    }

    // z^2 with b -> a at a = 1: factor (2/3)^2
    HarmonicMap square({Cx(0.0), Cx(1.0)}, {Cx(0.0), Cx(0.0)});
    const OperatorParams pe = OperatorParams::equal_to_a(1.0);
    for (int k = 0; k < 5; ++k) {
        const Cx z = random_disk_point(0.9);
        CHECK(std::abs(hab_integral_oracle(pe, square, DiskPoint(z)) - (4.0 / 9.0) * z * z) <
              1e-9);
    }
}

TEST_CASE("transform matches the integral oracle on random polynomials") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const HarmonicMap f = random_polynomial(2 + trial);
        const double a = -0.85 + 3.8 * u(rng);
        OperatorParams p = OperatorParams::limit_infinity(a);
        if (trial % 3 == 1) {
            double b = -0.85 + 3.8 * u(rng);
            if (std::abs(b - a) < 0.1) b += 0.3;
            p = OperatorParams::finite(a, b);
        } else if (trial % 3 == 2) {
            p = OperatorParams::equal_to_a(a);
        }
        const HarmonicMap image = apply_hab(p, f);
        for (int k = 0; k < 8; ++k) {
            const DiskPoint z(random_disk_point(0.9));
            CHECK(std::abs(eval(image, z) - hab_integral_oracle(p, f, z)) < 1e-8);
        }
    }
}

TEST_CASE("phi: worked values") {
    CHECK(phi(2.0, 0.0, 0.0) == doctest::Approx(5.0));
    // a = 2, b = 59/20: phi(n) = 2 n^2 - 69/5 n + 473/20
    const double a = 2.0, b = 59.0 / 20.0;
    for (int n = 2; n <= 10; ++n) {
        CHECK(phi(n, a, b) ==
              doctest::Approx(2.0 * n * n - 69.0 / 5.0 * n + 473.0 / 20.0).epsilon(1e-13));
        CHECK(phi(n, a, b) > 0.0);
    }
    // ab = 3 at n = 2 gives a + b + 2
    CHECK(phi(2.0, 1.5, 2.0) == doctest::Approx(1.5 + 2.0 + 2.0));
}

TEST_CASE("transfer condition: three rules and a rejection") {
    const TransferVerdict easy = transfer_condition(1.0, 1.0);
    CHECK(easy.admissible);
    CHECK(easy.rule == TransferRule::product_bound);

    const TransferVerdict remark = transfer_condition(2.0, 59.0 / 20.0);
    CHECK(remark.admissible);
    CHECK(remark.rule == TransferRule::floor_match);
    REQUIRE(remark.roots.has_value());
    CHECK(remark.roots->first > remark.roots->second);
    CHECK(std::floor(remark.roots->first) == 3.0);
    CHECK(std::floor(remark.roots->second) == 3.0);

    const TransferVerdict reject = transfer_condition(10.0, 10.0);
    CHECK_FALSE(reject.admissible);
    CHECK(reject.rule == TransferRule::none);
    CHECK(reject.phi_min_over_n < 0.0);

    // quartic-bound region: ab slightly above 3 with small a + b excess
    const TransferVerdict quartic = transfer_condition(1.5, 2.2);
    CHECK(quartic.admissible);
    CHECK(quartic.rule == TransferRule::quartic_bound);
}

TEST_CASE("phi is nonnegative on n >= 2 whenever a rule fires") {
    for (double a = -0.9; a <= 5.0; a += 0.24)
        for (double b = -0.9; b <= 5.0; b += 0.24) {
            const TransferVerdict v = transfer_condition(a, b);
            if (!v.admissible) continue;
            for (int n = 2; n <= 100; ++n) {
                CHECK(phi(n, a, b) >= -1e-9);
            }
        }
}

TEST_CASE("special case ranges and the psi sweep") {
    CHECK(special_case_ranges(SpecialCase::b_infinity, 0.0));
    CHECK_FALSE(special_case_ranges(SpecialCase::b_infinity, 0.01));
    CHECK(special_case_ranges(SpecialCase::b_infinity, -0.9));

    const double psi3 = (3.0 * std::sqrt(2.0) - std::sqrt(5.0)) / (std::sqrt(5.0) - std::sqrt(2.0));
    CHECK(psi(3) == doctest::Approx(psi3).epsilon(1e-15));
    CHECK(std::abs(psi3 - 2.4415) < 1e-4);
    CHECK(special_case_ranges(SpecialCase::a_equals_b, psi3));
    CHECK_FALSE(special_case_ranges(SpecialCase::a_equals_b, psi3 + 1e-9));

    int argmin = 2;
    for (int n = 2; n <= 10000; ++n)
        if (psi(n) < psi(argmin)) argmin = n;
    CHECK(argmin == 3);
}

TEST_CASE("transfer: worked examples") {
    // f = z + 0.45 conj(z): no n >= 2 terms, any admissible parameters
    const HarmonicMap f1({Cx(1.0)}, {Cx(0.45)});
    const auto [img1, v1] = transfer_us_to_uk(f1, OperatorParams::finite(1.0, 1.5));
    CHECK(v1.admissible);
    CHECK(uk_sufficient(img1).passed);

    // f = z + conj(z^3/12), a = b = 1: factor ((1+1)/(1+3))^2 = 1/4 at n = 3
    const HarmonicMap f2({Cx(1.0), Cx(0.0), Cx(0.0)}, {Cx(0.0), Cx(0.0), Cx(1.0 / 12.0)});
    CHECK(us_sufficient(f2).margin == doctest::Approx(0.25));
    const auto [img2, v2] = transfer_us_to_uk(f2, OperatorParams::equal_to_a(1.0));
    CHECK(v2.admissible);
    CHECK(std::abs(img2.g().coeff(3).real() - 1.0 / 48.0) < 1e-10);
    CHECK(uk_sufficient(img2).passed);

    // inadmissible parameters still return the image, with no claim
    const auto [img3, v3] = transfer_us_to_uk(f1, OperatorParams::finite(10.0, 10.0 + 1e-9));
    CHECK_FALSE(v3.admissible);
    CHECK(img3.truncation_order() == f1.truncation_order());

    // hypothesis failure
    const HarmonicMap heavy({Cx(1.0), Cx(0.4)}, {Cx(0.0)});
    CHECK_THROWS_AS(transfer_us_to_uk(heavy, OperatorParams::finite(1.0, 2.0)), HypothesisError);
}

TEST_CASE("transfer admissibility implies the image passes the convex test") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        // random starlike-feasible map
        const int degree = 2 + int(u(rng) * 7);
        std::vector<Cx> hc(degree, Cx(0.0)), gc(degree, Cx(0.0));
        hc[0] = Cx(1.0);
        double budget = 0.5 * u(rng);
        gc[0] = std::polar(budget * u(rng), 6.28 * u(rng));
        budget -= std::abs(gc[0]);
        for (int n = 2; n <= degree; ++n) {
            const double share = budget * u(rng);
            budget -= share;
            const double mag = share / n;
            if (u(rng) < 0.5)
                hc[n - 1] = std::polar(mag, 6.28 * u(rng));
            else
                gc[n - 1] = std::polar(mag, 6.28 * u(rng));
        }
        const HarmonicMap f(std::move(hc), std::move(gc));
        REQUIRE(us_sufficient(f).passed);

        const double a = -0.9 + 4.0 * u(rng);
        double b = -0.9 + 4.0 * u(rng);
        if (std::abs(b - a) < 1e-6) b += 0.1;
        const auto [image, verdict] = transfer_us_to_uk(f, OperatorParams::finite(a, b));
        if (verdict.admissible) {
            CHECK(uk_sufficient(image).margin >= -1e-12);
        }
    }
}

TEST_CASE("inverse transfer: identity, boundary case, and round trip") {
    const HarmonicMap id = HarmonicMap::identity();
    const HarmonicMap same = inverse_transfer(id, 1.0);
    CHECK(same.h().coeff(1) == Cx(1.0));

    // F = z - conj(z^2/6), a = 1: us margin lands exactly on the boundary
    const HarmonicMap sharp({Cx(1.0), Cx(0.0)}, {Cx(0.0), Cx(-1.0 / 6.0)});
    const HarmonicMap inv = inverse_transfer(sharp, 1.0);
    CHECK(std::abs(inv.g().coeff(2).real() + 0.25) < 1e-15);
    const ClassVerdict us = us_sufficient(inv);
    CHECK(us.passed);
    CHECK(std::abs(us.margin) < 1e-12);

    // inverse after the b -> infinity transform is the identity on coefficients
    const HarmonicMap f({Cx(1.0), Cx(0.05), Cx(0.01)}, {Cx(0.0), Cx(0.02), Cx(0.0)});
    const double a = 1.7;
    const HarmonicMap round = inverse_transfer(apply_hab(OperatorParams::limit_infinity(a), f), a);
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(std::abs(round.h().coeff(n) - f.h().coeff(n)) < 1e-15);
        CHECK(std::abs(round.g().coeff(n) - f.g().coeff(n)) < 1e-15);
    }

    CHECK_THROWS_AS(inverse_transfer(sharp, 0.5), DomainError);
    const HarmonicMap with_b1({Cx(1.0)}, {Cx(0.3)});
    CHECK_THROWS_AS(inverse_transfer(with_b1, 1.5), HypothesisError);
}
