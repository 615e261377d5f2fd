#include "ct/rational.hpp"

#include <cmath>
#include <ostream>

#include "ct/errors.hpp"

namespace ct {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw DomainError("malformed rational: '" + std::string(whole) + "'");
    BigInt value(std::string(s), 10);
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw ArithmeticError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), text);
        const std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw DomainError("malformed rational: '" + std::string(text) + "'");
        return Rational(num, BigInt(std::string(den_text), 10));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw DomainError("malformed rational: '" + std::string(text) + "'");
        }
        const std::string digits = std::string(int_part) + std::string(frac_part);
        BigInt num(digits, 10);
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        if (negative) num = -num;
        return Rational(num, den);
    }
    return Rational(parse_integer(text, text));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
    return Rational(mpq_class(value));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw ArithmeticError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

BigInt gcd(const BigInt& lhs, const BigInt& rhs) {
    BigInt result;
    mpz_gcd(result.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
    return result;
}

BigInt lcm(const BigInt& lhs, const BigInt& rhs) {
    BigInt result;
    mpz_lcm(result.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
    return result;
}

}  // namespace ct
