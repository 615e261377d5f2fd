#pragma once

#include <iosfwd>
#include <string>

#include "ct/poly.hpp"

namespace ct {

/// Quotient of two polynomials in canonical form: gcd(num, den) = 1 and den
/// monic. Equality is structural.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(Rational(1))) {}
    RatFunc(const Poly& num) : RatFunc(num, Poly::constant(Rational(1))) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& value) : RatFunc(Poly::constant(value)) {}       // NOLINT(google-explicit-constructor)
    RatFunc(long value) : RatFunc(Rational(value)) {}                        // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc derivative() const;
    /// Throws PoleError when den(point) = 0.
    Rational eval(const Rational& point) const;
    /// this(g(u)); throws ArithmeticError when the substituted denominator vanishes.
    RatFunc compose(const RatFunc& g) const;
    RatFunc pow(unsigned exponent) const;
    RatFunc inverse() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
    RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
    RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }
    RatFunc& operator/=(const RatFunc& rhs) { return *this = *this / rhs; }

    friend RatFunc operator+(const RatFunc& lhs, const RatFunc& rhs);
    friend RatFunc operator-(const RatFunc& lhs, const RatFunc& rhs);
    friend RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs);
    friend RatFunc operator/(const RatFunc& lhs, const RatFunc& rhs);
    friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) = default;

    std::string to_string(char var = 'x') const;

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace ct
