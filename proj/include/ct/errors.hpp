#pragma once

#include <stdexcept>
#include <string>

namespace ct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero (Rational, Poly, RatFunc) or a zero denominator.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a rational function at one of its poles.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A value violates the documented invariant of a domain type.
class DomainError : public Error {
public:
    using Error::Error;
};

class NonRationalRootError : public Error {
public:
    using Error::Error;
};

class DivergentIntegralError : public Error {
public:
    using Error::Error;
};

class FactorBoundExceeded : public Error {
public:
    using Error::Error;
};

/// No telescoping relation within the configured search bounds.
class AnsatzExhausted : public Error {
public:
    AnsatzExhausted(int max_order, int max_cert_degree)
        : Error("ansatz exhausted: no telescoping relation with order <= " +
                std::to_string(max_order) + " and certificate degree <= " +
                std::to_string(max_cert_degree)),
          max_order_(max_order),
          max_cert_degree_(max_cert_degree) {}

    int max_order() const noexcept { return max_order_; }
    int max_cert_degree() const noexcept { return max_cert_degree_; }

private:
    int max_order_;
    int max_cert_degree_;
};

class SingularRecurrenceStep : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature hit its subdivision cap before meeting the tolerance.
class ToleranceNotMet : public Error {
public:
    ToleranceNotMet(double best_value, double error_estimate, int subdivisions)
        : Error("tolerance not met: value " + std::to_string(best_value) + ", estimate " +
                std::to_string(error_estimate)),
          best_value_(best_value),
          error_estimate_(error_estimate),
          subdivisions_(subdivisions) {}

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }
    int subdivisions() const noexcept { return subdivisions_; }

private:
    double best_value_;
    double error_estimate_;
    int subdivisions_;
};

}  // namespace ct
