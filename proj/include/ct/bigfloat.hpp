#pragma once

#include <string>

#include <mpfr.h>

#include "ct/rational.hpp"

namespace ct {

/// Owning wrapper around an MPFR value with its own precision. Arithmetic
/// rounds to nearest at the precision of the left operand.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = 256);
    BigFloat(double value, long precision_bits);
    BigFloat(const Rational& value, long precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
    BigFloat rounded_to(long precision_bits) const;

    static BigFloat log(const BigInt& value, long precision_bits);
    static BigFloat sqrt(const BigFloat& value);
    static BigFloat log(const BigFloat& value);
    static BigFloat exp(const BigFloat& value);

    BigFloat abs() const;
    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Binary exponent e with 2^(e-1) <= |x| < 2^e; undefined for zero.
    long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }

    /// Scientific notation with the given number of significant digits.
    std::string to_scientific(int digits) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

    friend bool operator<(const BigFloat& lhs, const BigFloat& rhs) { return mpfr_less_p(lhs.value_, rhs.value_) != 0; }
    friend bool operator>(const BigFloat& lhs, const BigFloat& rhs) { return rhs < lhs; }
    friend bool operator<=(const BigFloat& lhs, const BigFloat& rhs) { return mpfr_lessequal_p(lhs.value_, rhs.value_) != 0; }
    friend bool operator==(const BigFloat& lhs, const BigFloat& rhs) { return mpfr_equal_p(lhs.value_, rhs.value_) != 0; }

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

private:
    mpfr_t value_;
};

}  // namespace ct
