#include "harmonic/class_tests.hpp"

#include <cmath>
#include <sstream>

namespace harmonic {

namespace {

void require_normalized(const HarmonicMap& f) {
    if (!f.is_normalized()) throw DomainError("class test requires a normalized map");
}

void require_b1_zero(const HarmonicMap& f) {
    if (std::abs(f.b1()) > 1e-12)
        throw DomainError("this test applies only to maps with b1 = 0");
}

std::string describe(double margin, std::size_t order) {
    std::ostringstream os;
    os << "margin " << margin << " over " << order << " retained coefficients";
    return os.str();
}

}  // namespace

ClassVerdict uk_sufficient(const HarmonicMap& f) {
    require_normalized(f);
    const double b1 = std::abs(f.b1());
    if (b1 >= 1.0) throw DomainError("uk_sufficient requires |b1| < 1");
    double sum = 0.0;
    const std::size_t order = f.truncation_order();
    for (std::size_t n = 2; n <= order; ++n) {
        const double w = static_cast<double>(n) * static_cast<double>(2 * n - 1);
        sum += w * (std::abs(f.h().coeff(n)) + std::abs(f.g().coeff(n)));
    }
    const double margin = (1.0 - b1) - sum;
    return {ClassLabel::uk, margin >= -kVerdictSlack, margin, describe(margin, order), order};
}

ClassVerdict us_sufficient(const HarmonicMap& f) {
    require_normalized(f);
    double sum = std::abs(f.b1());
    const std::size_t order = f.truncation_order();
    for (std::size_t n = 2; n <= order; ++n) {
        sum += static_cast<double>(n) * (std::abs(f.h().coeff(n)) + std::abs(f.g().coeff(n)));
    }
    const double margin = 0.5 - sum;
    return {ClassLabel::us_star, margin >= -kVerdictSlack, margin, describe(margin, order), order};
}

ClassVerdict a2_necessary(const HarmonicMap& f, A2Bound which) {
    require_normalized(f);
    const double s3 = std::sqrt(3.0);
    double bound = 0.0;
    ClassLabel label = ClassLabel::ak_necessary;
    switch (which) {
        case A2Bound::ak0:
            require_b1_zero(f);
            bound = 2.0 / s3;
            label = ClassLabel::ak0_necessary;
            break;
        case A2Bound::uk0:
            require_b1_zero(f);
            bound = 1.0 / s3;
            label = ClassLabel::uk0_necessary;
            break;
        case A2Bound::ak:
            bound = (s3 + 4.0) / (2.0 * s3);
            label = ClassLabel::ak_necessary;
            break;
    }
    const double margin = bound - std::abs(f.h().coeff(2));
    return {label, margin >= -kVerdictSlack, margin, describe(margin, f.truncation_order()),
            f.truncation_order()};
}

ClassVerdict a2_b2_remark(const HarmonicMap& f) {
    require_normalized(f);
    require_b1_zero(f);
    const Cx a2 = f.h().coeff(2);
    if (std::abs(a2.imag()) > 1e-12)
        throw DomainError("a2_b2_remark requires a2 real (rotate the map first)");
    if (a2.real() < 0.0)
        throw DomainError("a2_b2_remark requires a2 >= 0 (rotate the map first)");
    const double margin = 1.0 - (a2.real() + f.g().coeff(2).real());
    return {ClassLabel::a2_b2_necessary, margin >= -kVerdictSlack, margin,
            describe(margin, f.truncation_order()), f.truncation_order()};
}

}  // namespace harmonic
