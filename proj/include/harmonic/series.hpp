#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "harmonic/errors.hpp"

namespace harmonic {

using Cx = std::complex<double>;

/// A point of the open unit disk. Construction rejects |z| >= 1, so a
/// DiskPoint is always a valid evaluation point.
class DiskPoint {
public:
    explicit DiskPoint(Cx z);
    Cx value() const { return z_; }

private:
    Cx z_;
};

/// Coefficients of an analytic series sum_{n>=1} c_n z^n on the unit disk.
///
/// Storage is dense from n = 1: coeffs()[k] is the coefficient of z^{k+1}.
/// There is no constant term; truncation_order() is the highest retained
/// power. All entries must be finite.
class ComplexCoeffSeq {
public:
    ComplexCoeffSeq() = default;
    explicit ComplexCoeffSeq(std::vector<Cx> coeffs);

    std::size_t truncation_order() const { return coeffs_.size(); }
    const std::vector<Cx>& coeffs() const { return coeffs_; }

    /// Coefficient of z^power (power >= 1); zero beyond the truncation.
    Cx coeff(std::size_t power) const;

    /// Nested (Horner) evaluation from the highest power down.
    Cx eval(Cx z) const;
    Cx eval_d1(Cx z) const;
    Cx eval_d2(Cx z) const;

private:
    std::vector<Cx> coeffs_;
};

/// Planar harmonic mapping f = h + conj(g) with h, g analytic and
/// represented as truncated series sharing one truncation order.
/// The normalized representative has a_1 = 1 (and no constant terms,
/// which the representation cannot hold anyway).
class HarmonicMap {
public:
    HarmonicMap() = default;

    /// Pads the shorter part with zeros so both share a truncation order.
    HarmonicMap(ComplexCoeffSeq h, ComplexCoeffSeq g);
    HarmonicMap(std::vector<Cx> h_coeffs, std::vector<Cx> g_coeffs);

    const ComplexCoeffSeq& h() const { return h_; }
    const ComplexCoeffSeq& g() const { return g_; }
    std::size_t truncation_order() const { return h_.truncation_order(); }

    /// g'(0), the distinguished first co-analytic coefficient.
    Cx b1() const { return g_.coeff(1); }

    bool is_normalized() const;

    static HarmonicMap identity(std::size_t order = 1);

private:
    ComplexCoeffSeq h_, g_;
};

/// First and second derivatives of both parts at one point.
struct Derivatives {
    Cx hp, hpp, gp, gpp;
};

Cx eval(const HarmonicMap& f, DiskPoint z);
Derivatives derivatives(const HarmonicMap& f, DiskPoint z);

/// |h'(z)|^2 - |g'(z)|^2. Positive where f is sense-preserving.
double jacobian(const HarmonicMap& f, DiskPoint z);

/// Disk-automorphism renormalization
///   F(z) = [f(e^{i theta}(z+a)/(1+conj(a)z)) - f(a e^{i theta})]
///          / [(1-|a|^2) h'(a e^{i theta}) e^{i theta}],
/// computed by truncated series composition (working order at least 256;
/// truncation error decays like |a|^N). Requires f normalized and
/// |h'(a e^{i theta})| > 1e-12. The result is normalized exactly.
HarmonicMap koebe_transform(const HarmonicMap& f, DiskPoint a, double theta);

/// Affine renormalization (f + c conj(f)) / (1 + c b1), |c| < 1.
/// Requires |1 + c b1| > 1e-12.
HarmonicMap affine_transform(const HarmonicMap& f, Cx c);

}  // namespace harmonic
