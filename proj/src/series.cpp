#include "harmonic/series.hpp"

#include <algorithm>
#include <cmath>

namespace harmonic {

namespace {

bool finite(Cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Dense polynomial with constant term, index = power. Used only inside
// the Koebe composition.
using Poly = std::vector<Cx>;

// c += a*b, truncated at degree max_pow.
Poly poly_mul(const Poly& a, const Poly& b, std::size_t max_pow) {
    Poly out(std::min(max_pow + 1, a.size() + b.size() - 1), Cx(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Cx(0.0)) continue;
        const std::size_t jmax = std::min(b.size(), out.size() - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
    }
    out.resize(max_pow + 1, Cx(0.0));
    return out;
}

}  // namespace

DiskPoint::DiskPoint(Cx z) : z_(z) {
    if (!finite(z) || std::abs(z) >= 1.0)
        throw DomainError("point is not inside the open unit disk");
}

ComplexCoeffSeq::ComplexCoeffSeq(std::vector<Cx> coeffs) : coeffs_(std::move(coeffs)) {
    for (Cx c : coeffs_)
        if (!finite(c)) throw DomainError("series coefficient is not finite");
}

Cx ComplexCoeffSeq::coeff(std::size_t power) const {
    if (power == 0 || power > coeffs_.size()) return Cx(0.0);
    return coeffs_[power - 1];
}

Cx ComplexCoeffSeq::eval(Cx z) const {
    Cx acc(0.0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc * z;
}

Cx ComplexCoeffSeq::eval_d1(Cx z) const {
    Cx acc(0.0);
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        acc = acc * z + static_cast<double>(k + 1) * coeffs_[k];
    return acc;
}

Cx ComplexCoeffSeq::eval_d2(Cx z) const {
    Cx acc(0.0);
    for (std::size_t k = coeffs_.size(); k-- > 1;)
        acc = acc * z + static_cast<double>((k + 1) * k) * coeffs_[k];
    return acc;
}

HarmonicMap::HarmonicMap(ComplexCoeffSeq h, ComplexCoeffSeq g) : h_(std::move(h)), g_(std::move(g)) {
    const std::size_t n = std::max(h_.truncation_order(), g_.truncation_order());
    auto pad = [n](ComplexCoeffSeq& s) {
        if (s.truncation_order() < n) {
            std::vector<Cx> c = s.coeffs();
            c.resize(n, Cx(0.0));
            s = ComplexCoeffSeq(std::move(c));
        }
    };
    pad(h_);
    pad(g_);
}

HarmonicMap::HarmonicMap(std::vector<Cx> h_coeffs, std::vector<Cx> g_coeffs)
    : HarmonicMap(ComplexCoeffSeq(std::move(h_coeffs)), ComplexCoeffSeq(std::move(g_coeffs))) {}

bool HarmonicMap::is_normalized() const {
    return h_.truncation_order() >= 1 && std::abs(h_.coeff(1) - Cx(1.0)) <= 1e-12;
}

HarmonicMap HarmonicMap::identity(std::size_t order) {
    std::vector<Cx> h(std::max<std::size_t>(order, 1), Cx(0.0));
    h[0] = Cx(1.0);
    return HarmonicMap(std::move(h), std::vector<Cx>(h.size(), Cx(0.0)));
}

Cx eval(const HarmonicMap& f, DiskPoint z) {
    return f.h().eval(z.value()) + std::conj(f.g().eval(z.value()));
}

Derivatives derivatives(const HarmonicMap& f, DiskPoint z) {
    const Cx v = z.value();
    return {f.h().eval_d1(v), f.h().eval_d2(v), f.g().eval_d1(v), f.g().eval_d2(v)};
}

double jacobian(const HarmonicMap& f, DiskPoint z) {
    const Cx v = z.value();
    return std::norm(f.h().eval_d1(v)) - std::norm(f.g().eval_d1(v));
}

HarmonicMap koebe_transform(const HarmonicMap& f, DiskPoint a, double theta) {
    if (!f.is_normalized())
        throw DomainError("koebe_transform requires a normalized map");
    const std::size_t n_work = std::max<std::size_t>(f.truncation_order(), 256);

    const Cx av = a.value();
    const Cx eit = std::polar(1.0, theta);
    const Cx b = av * eit;  // image of the origin

    const Cx hpb = f.h().eval_d1(b);
    if (std::abs(hpb) <= 1e-12)
        throw DegenerateDerivativeError("h' degenerate at the renormalization point");

    // Mobius factor: e^{i theta}(z + a) * sum_k (-conj(a) z)^k, truncated.
    Poly inv(n_work + 1);
    Cx p(1.0);
    for (std::size_t k = 0; k <= n_work; ++k) {
        inv[k] = p;
        p *= -std::conj(av);
    }
    Poly mob(n_work + 1, Cx(0.0));
    for (std::size_t k = 0; k <= n_work; ++k) {
        mob[k] = eit * (av * inv[k] + (k >= 1 ? inv[k - 1] : Cx(0.0)));
    }

    // Horner over the Mobius series: sum_n c_n mob^n, constant term kept.
    auto compose = [&](const ComplexCoeffSeq& s) {
        Poly acc(1, Cx(0.0));
        const auto& c = s.coeffs();
        for (std::size_t k = c.size(); k-- > 0;) {
            acc = poly_mul(acc, mob, n_work);
            acc[0] += c[k];
        }
        return poly_mul(acc, mob, n_work);
    };

    const Poly comp_h = compose(f.h());
    const Poly comp_g = compose(f.g());

    const Cx d = (1.0 - std::norm(av)) * hpb * eit;

    std::vector<Cx> hc(n_work), gc(n_work);
    for (std::size_t k = 1; k <= n_work; ++k) {
        hc[k - 1] = comp_h[k] / d;
        gc[k - 1] = comp_g[k] / std::conj(d);
    }

    // Renormalize so the leading coefficient is exactly one. A1 differs
    // from 1 only by the composition's truncation error.
    const Cx a1 = hc[0];
    if (std::abs(a1) <= 1e-12)
        throw DegenerateDerivativeError("composed map degenerate at the origin");
    for (std::size_t k = 0; k < n_work; ++k) {
        hc[k] /= a1;
        gc[k] /= std::conj(a1);
    }
    hc[0] = Cx(1.0);

    return HarmonicMap(std::move(hc), std::move(gc));
}

HarmonicMap affine_transform(const HarmonicMap& f, Cx c) {
    if (std::abs(c) >= 1.0) throw DomainError("affine parameter must satisfy |c| < 1");
    const Cx s = Cx(1.0) + c * f.b1();
    if (std::abs(s) <= 1e-12)
        throw SingularNormalizationError("affine normalization 1 + c b1 is singular");

    const std::size_t n = f.truncation_order();
    std::vector<Cx> hc(n), gc(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Cx hk = f.h().coeffs()[k];
        const Cx gk = f.g().coeffs()[k];
        hc[k] = (hk + c * gk) / s;
        gc[k] = (gk + std::conj(c) * hk) / std::conj(s);
    }
    if (f.is_normalized() && n >= 1) hc[0] = Cx(1.0);  // (a1 + c b1)/s = 1 exactly
    return HarmonicMap(std::move(hc), std::move(gc));
}

}  // namespace harmonic
