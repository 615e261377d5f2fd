#pragma once

#include "ct/ratfunc.hpp"

namespace ct {

/// The parameters (a, b) of the identity, with a > b > 0.
class ParameterPair {
public:
    ParameterPair(Rational a, Rational b);

    /// Skips validation; used to exercise degenerate inputs downstream.
    static ParameterPair unchecked(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool valid() const;

    friend bool operator==(const ParameterPair&, const ParameterPair&) = default;

private:
    struct Unchecked {};
    ParameterPair(Rational a, Rational b, Unchecked) : a_(std::move(a)), b_(std::move(b)) {}

    Rational a_;
    Rational b_;
};

/// F(n, x) = c(x) * r(x)^n on [0, 1]. Construction checks that c and r have
/// no poles in [0, 1] and that r(0) = r(1) = 0.
class IntegrandFamily {
public:
    IntegrandFamily(RatFunc cofactor, RatFunc ratio);

    const RatFunc& cofactor() const { return cofactor_; }
    const RatFunc& ratio() const { return ratio_; }

    /// F(n, x) as a single rational function of x.
    RatFunc at(unsigned n) const;

    friend bool operator==(const IntegrandFamily&, const IntegrandFamily&) = default;

private:
    RatFunc cofactor_;
    RatFunc ratio_;
};

/// x^n (1-x)^n / ((x+a)(x+b))^(n+1)
IntegrandFamily make_left_family(const ParameterPair& params);

/// x^n (1-x)^n / ((a-b)x + (a+1)b)^(n+1)
IntegrandFamily make_right_family(const ParameterPair& params);

/// F'(n,x)/F(n,x) = c'/c + n r'/r
RatFunc log_derivative(const IntegrandFamily& family, unsigned n);

/// F(n+k,x)/F(n,x) = r^k
RatFunc shifted_ratio(const IntegrandFamily& family, unsigned k);

/// True when den has no root in the closed interval [0, 1].
bool pole_free_on_unit_interval(const RatFunc& f);

}  // namespace ct
