#include "ct/ratfunc.hpp"

#include <algorithm>
#include <ostream>

#include "ct/errors.hpp"

namespace ct {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    const Poly g = gcd(num, den);
    Poly n = divrem(num, g).first;
    Poly d = divrem(den, g).first;
    const Rational lead = d.leading();
    num_ = n.scaled(lead.inverse());
    den_ = d.scaled(lead.inverse());
}

RatFunc operator+(const RatFunc& lhs, const RatFunc& rhs) {
    if (lhs.den_ == rhs.den_) return RatFunc(lhs.num_ + rhs.num_, lhs.den_);
    return RatFunc(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

RatFunc operator-(const RatFunc& lhs, const RatFunc& rhs) { return lhs + (-rhs); }

RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    // Cross-cancel first to keep intermediate degrees down.
    const Poly g1 = gcd(lhs.num_, rhs.den_);
    const Poly g2 = gcd(rhs.num_, lhs.den_);
    const Poly num = divrem(lhs.num_, g1).first * divrem(rhs.num_, g2).first;
    const Poly den = divrem(lhs.den_, g2).first * divrem(rhs.den_, g1).first;
    const Rational lead = den.leading();
    return RatFunc(num.scaled(lead.inverse()), den.scaled(lead.inverse()), RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& lhs, const RatFunc& rhs) { return lhs * rhs.inverse(); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ArithmeticError("division by the zero rational function");
    const Rational lead = num_.leading();
    return RatFunc(den_.scaled(lead.inverse()), num_.scaled(lead.inverse()), Canonical{});
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::eval(const Rational& point) const {
    const Rational d = den_.eval(point);
    if (d.is_zero()) throw PoleError("evaluation at a pole: x = " + point.to_string());
    return num_.eval(point) / d;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
    // With f = N/D and g = P/S, f(g) = (sum n_i P^i S^(m-i)) / (sum d_i P^i S^(m-i)).
    const int m = std::max(num_.degree(), den_.degree());
    auto homogenize = [&](const Poly& p) {
        Poly acc;
        Poly p_pow = Poly::constant(Rational(1));
        for (int i = 0; i <= p.degree(); ++i) {
            if (!p.coeff(i).is_zero()) acc += (p_pow * g.den_.pow(static_cast<unsigned>(m - i))).scaled(p.coeff(i));
            p_pow = p_pow * g.num_;
        }
        return acc;
    };
    const Poly den = homogenize(den_);
    if (den.is_zero()) throw ArithmeticError("degenerate composition: substituted denominator vanishes");
    return RatFunc(homogenize(num_), den);
}

RatFunc RatFunc::pow(unsigned exponent) const {
    // Powers of coprime polynomials stay coprime.
    return RatFunc(num_.pow(exponent), den_.pow(exponent), Canonical{});
}

std::string RatFunc::to_string(char var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace ct
