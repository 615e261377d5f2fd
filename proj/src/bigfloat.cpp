#include "ct/bigfloat.hpp"

#include <vector>

namespace ct {

BigFloat::BigFloat(long precision_bits) {
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, long precision_bits) {
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) {
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded_to(long precision_bits) const {
    BigFloat out(precision_bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::log(const BigInt& value, long precision_bits) {
    BigFloat out(precision_bits);
    BigFloat arg(precision_bits);
    mpfr_set_z(arg.value_, value.get_mpz_t(), MPFR_RNDN);
    mpfr_log(out.value_, arg.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::log(const BigFloat& value) {
    BigFloat out(value.precision());
    mpfr_log(out.value_, value.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::exp(const BigFloat& value) {
    BigFloat out(value.precision());
    mpfr_exp(out.value_, value.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt(const BigFloat& value) {
    BigFloat out(value.precision());
    mpfr_sqrt(out.value_, value.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision());
    mpfr_abs(out.value_, value_, MPFR_RNDN);
    return out;
}

std::string BigFloat::to_scientific(int digits) const {
    if (digits < 1) digits = 1;
    const int size = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
    std::vector<char> buf(static_cast<size_t>(size) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return std::string(buf.data(), static_cast<size_t>(size));
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

}  // namespace ct
