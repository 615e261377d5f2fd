#include "ct/integrand.hpp"

#include "ct/errors.hpp"

namespace ct {

ParameterPair::ParameterPair(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (!valid()) {
        throw DomainError("parameters require a > b > 0 (got a = " + a_.to_string() + ", b = " + b_.to_string() + ")");
    }
}

ParameterPair ParameterPair::unchecked(Rational a, Rational b) { return {std::move(a), std::move(b), Unchecked{}}; }

bool ParameterPair::valid() const { return a_ > b_ && b_.sign() > 0; }

bool pole_free_on_unit_interval(const RatFunc& f) {
    return count_real_roots(f.den(), Rational(0), Rational(1)) == 0;
}

IntegrandFamily::IntegrandFamily(RatFunc cofactor, RatFunc ratio)
    : cofactor_(std::move(cofactor)), ratio_(std::move(ratio)) {
    if (cofactor_.is_zero()) throw DomainError("integrand cofactor is identically zero");
    if (ratio_.is_zero()) throw DomainError("integrand ratio is identically zero");
    if (!pole_free_on_unit_interval(cofactor_)) throw DomainError("integrand cofactor has a pole in [0,1]");
    if (!pole_free_on_unit_interval(ratio_)) throw DomainError("integrand ratio has a pole in [0,1]");
    if (!ratio_.eval(Rational(0)).is_zero() || !ratio_.eval(Rational(1)).is_zero()) {
        throw DomainError("integrand ratio must vanish at x = 0 and x = 1");
    }
}

RatFunc IntegrandFamily::at(unsigned n) const { return cofactor_ * ratio_.pow(n); }

namespace {

// x(1 - x)
Poly beta_kernel() { return Poly{Rational(0), Rational(1), Rational(-1)}; }

}  // namespace

IntegrandFamily make_left_family(const ParameterPair& params) {
    const Poly q = Poly{params.a(), Rational(1)} * Poly{params.b(), Rational(1)};
    return {RatFunc(Poly::constant(Rational(1)), q), RatFunc(beta_kernel(), q)};
}

IntegrandFamily make_right_family(const ParameterPair& params) {
    const Rational& a = params.a();
    const Rational& b = params.b();
    const Poly q{(a + Rational(1)) * b, a - b};
    return {RatFunc(Poly::constant(Rational(1)), q), RatFunc(beta_kernel(), q)};
}

RatFunc log_derivative(const IntegrandFamily& family, unsigned n) {
    const RatFunc& c = family.cofactor();
    RatFunc result = c.derivative() / c;
    if (n == 0) return result;
    const RatFunc& r = family.ratio();
    return result + RatFunc(Rational(static_cast<long>(n))) * (r.derivative() / r);
}

RatFunc shifted_ratio(const IntegrandFamily& family, unsigned k) { return family.ratio().pow(k); }

}  // namespace ct
