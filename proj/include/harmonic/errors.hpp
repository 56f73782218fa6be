#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace harmonic {

/// Argument outside the mathematical domain of an operation
/// (point outside the unit disk, parameter range violation, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gamma function evaluated too close to a nonpositive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A series or adaptive scheme ran out of budget before reaching its
/// tolerance. `tail_estimate` is the size of the last computed increment.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double tail_estimate)
        : std::runtime_error(what), tail_(tail_estimate) {}
    double tail_estimate() const { return tail_; }

private:
    double tail_;
};

/// Jacobian was nonpositive at a sample point where sense preservation
/// is required. Carries the offending point and the Jacobian value there.
class SensePreservationError : public std::runtime_error {
public:
    SensePreservationError(std::complex<double> witness, double jacobian_value)
        : std::runtime_error("map is not sense-preserving at sampled point"),
          witness_(witness), jacobian_(jacobian_value) {}
    std::complex<double> witness() const { return witness_; }
    double jacobian_value() const { return jacobian_; }

private:
    std::complex<double> witness_;
    double jacobian_;
};

/// |h'| fell below the degeneracy tolerance at the renormalization point.
class DegenerateDerivativeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// |1 + c b1| fell below tolerance in the affine renormalization.
class SingularNormalizationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// z and zeta coincide where a two-point functional requires z != zeta.
class CoincidentPointsError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A two-point functional's denominator fell below tolerance.
class VanishingDenominatorError : public std::runtime_error {
public:
    VanishingDenominatorError(std::complex<double> z, std::complex<double> zeta)
        : std::runtime_error("denominator vanished at sampled pair"),
          z_(z), zeta_(zeta) {}
    std::complex<double> z() const { return z_; }
    std::complex<double> zeta() const { return zeta_; }

private:
    std::complex<double> z_, zeta_;
};

/// Input map fails the coefficient hypothesis an operator requires.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Successive image points collapsed while sampling a curve.
class DegeneratePolylineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace harmonic
