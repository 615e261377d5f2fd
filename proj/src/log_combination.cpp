#include "ct/log_combination.hpp"

#include <sstream>

#include "ct/errors.hpp"

namespace ct {

std::vector<std::pair<BigInt, unsigned long>> factorize(const BigInt& n, unsigned long bound) {
    if (n <= 0) throw DomainError("factorize requires a positive integer");
    std::vector<std::pair<BigInt, unsigned long>> out;
    BigInt rest = n;
    auto strip = [&](unsigned long p) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) out.emplace_back(BigInt(p), e);
    };
    strip(2);
    for (unsigned long p = 3; p <= bound && rest > 1; p += 2) {
        if (BigInt(p) * p > rest) break;
        strip(p);
    }
    if (rest > 1) {
        // No factor <= min(bound, sqrt(rest)) remains.
        const BigInt b(bound);
        if (b * b < rest && rest > b) {
            throw FactorBoundExceeded("factor bound " + std::to_string(bound) + " exceeded while factoring " +
                                      n.get_str());
        }
        out.emplace_back(rest, 1);
    }
    return out;
}

LogCombination::LogCombination(Rational constant, Terms terms) : constant_(std::move(constant)) {
    for (auto& [p, c] : terms) {
        if (!c.is_zero()) terms_.emplace(p, std::move(c));
    }
}

LogCombination LogCombination::log_of(const Rational& value, unsigned long factor_bound) {
    if (value.sign() <= 0) throw DomainError("log of a non-positive rational: " + value.to_string());
    Terms terms;
    for (const auto& [p, e] : factorize(value.numerator(), factor_bound)) terms[p] += Rational(static_cast<long>(e));
    for (const auto& [p, e] : factorize(value.denominator(), factor_bound)) terms[p] -= Rational(static_cast<long>(e));
    return {Rational(0), std::move(terms)};
}

LogCombination LogCombination::scaled(const Rational& factor) const {
    if (factor.is_zero()) return {};
    LogCombination out(constant_ * factor);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * factor);
    return out;
}

LogCombination& LogCombination::operator+=(const LogCombination& rhs) {
    constant_ += rhs.constant_;
    for (const auto& [p, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LogCombination& LogCombination::operator-=(const LogCombination& rhs) { return *this += -rhs; }

BigFloat LogCombination::to_float(long precision_bits) const {
    if (precision_bits < 2) throw DomainError("precision must be at least 2 bits");
    if (terms_.empty()) return BigFloat(constant_, precision_bits);
    long working = precision_bits + 32;
    for (;;) {
        BigFloat sum(constant_, working);
        BigFloat magnitude = sum.abs();
        for (const auto& [p, c] : terms_) {
            BigFloat term = BigFloat::log(p, working) * BigFloat(c, working);
            magnitude += term.abs();
            sum += term;
        }
        // Each term carries at most ~3 roundings, the sum one more per term.
        const long guard = 4 + static_cast<long>(2 * terms_.size());
        if (!sum.is_zero() && !magnitude.is_zero() &&
            sum.exponent() - magnitude.exponent() > -(working - precision_bits - guard - 3)) {
            return sum.rounded_to(precision_bits);
        }
        // A nonzero combination of logs of primes is never zero, so this terminates.
        working *= 2;
    }
}

std::string LogCombination::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (!constant_.is_zero() || terms_.empty()) {
        os << constant_;
        first = false;
    }
    for (const auto& [p, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.abs();
        if (!mag.is_one()) os << mag << "*";
        os << "log(" << p.get_str() << ")";
    }
    return os.str();
}

}  // namespace ct
