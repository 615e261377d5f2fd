#pragma once

#include <map>
#include <string>
#include <vector>

#include "ct/bigfloat.hpp"
#include "ct/rational.hpp"

namespace ct {

inline constexpr unsigned long kDefaultFactorBound = 1'000'000;

/// Prime factorization of n > 0 by trial division up to `bound`. A cofactor
/// left over after trial division is accepted as prime only when it is below
/// bound^2; otherwise FactorBoundExceeded is thrown.
std::vector<std::pair<BigInt, unsigned long>> factorize(const BigInt& n, unsigned long bound = kDefaultFactorBound);

/// constant + sum_p coeff_p * log(p) over distinct primes p. Canonical: no
/// zero coefficients are stored, so equality is structural.
class LogCombination {
public:
    using Terms = std::map<BigInt, Rational>;

    LogCombination() = default;
    explicit LogCombination(Rational constant) : constant_(std::move(constant)) {}
    LogCombination(Rational constant, Terms terms);

    /// log(value) for a positive rational.
    static LogCombination log_of(const Rational& value, unsigned long factor_bound = kDefaultFactorBound);

    const Rational& constant() const { return constant_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return constant_.is_zero() && terms_.empty(); }
    bool is_rational() const { return terms_.empty(); }

    LogCombination scaled(const Rational& factor) const;

    LogCombination operator-() const { return scaled(Rational(-1)); }
    LogCombination& operator+=(const LogCombination& rhs);
    LogCombination& operator-=(const LogCombination& rhs);
    friend LogCombination operator+(LogCombination lhs, const LogCombination& rhs) { return lhs += rhs; }
    friend LogCombination operator-(LogCombination lhs, const LogCombination& rhs) { return lhs -= rhs; }
    friend LogCombination operator*(const Rational& factor, const LogCombination& v) { return v.scaled(factor); }
    friend bool operator==(const LogCombination&, const LogCombination&) = default;

    /// Real value rounded to `precision_bits`. Intermediate precision is
    /// raised until cancellation between the terms is resolved.
    BigFloat to_float(long precision_bits) const;

    std::string to_string() const;

private:
    Rational constant_;
    Terms terms_;
};

}  // namespace ct
