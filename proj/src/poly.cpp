#include "ct/poly.hpp"

#include <ostream>
#include <sstream>

#include "ct/errors.hpp"

namespace ct {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& value) { return Poly(std::vector<Rational>{value}); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw DomainError("negative monomial degree");
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    coeffs.back() = c;
    return Poly(std::move(coeffs));
}

Poly Poly::linear_factor(const Rational& root) { return Poly{-root, Rational(1)}; }

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw ArithmeticError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::eval(const Rational& point) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= point;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::compose(const Poly& g) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * g;
        acc += constant(*it);
    }
    return acc;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result = constant(Rational(1));
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Poly Poly::scaled(const Rational& factor) const {
    if (factor.is_zero()) return {};
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c *= factor;
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return scaled(leading().inverse());
}

Rational Poly::content() const {
    if (is_zero()) return Rational(0);
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        num_gcd = ct::gcd(num_gcd, c.numerator());
        den_lcm = ct::lcm(den_lcm, c.denominator());
    }
    Rational result(num_gcd, den_lcm);
    return leading().sign() < 0 ? -result : result;
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    return scaled(content().inverse());
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag.is_one();
        if (i == 0 || !unit) {
            if (!mag.is_integer() && i > 0) {
                os << "(" << mag << ")";
            } else {
                os << mag;
            }
        }
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::pair<Poly, Poly> divrem(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (dividend.degree() < divisor.degree()) return {Poly{}, dividend};
    const int dd = divisor.degree();
    const Rational inv_lead = divisor.leading().inverse();
    std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    std::vector<Rational> quot(static_cast<size_t>(dividend.degree() - dd) + 1);
    for (int i = dividend.degree(); i >= dd; --i) {
        const Rational q = rem[static_cast<size_t>(i)] * inv_lead;
        if (q.is_zero()) continue;
        quot[static_cast<size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= q * divisor.coeff(j);
    }
    rem.resize(static_cast<size_t>(dd));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly pseudo_remainder(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (dividend.degree() < divisor.degree()) return dividend;
    const unsigned delta = static_cast<unsigned>(dividend.degree() - divisor.degree() + 1);
    return divrem(dividend.scaled(divisor.leading().pow(delta)), divisor).second;
}

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw ArithmeticError("gcd of two zero polynomials");
    if (q.is_zero()) return p.monic();
    if (p.is_zero()) return q.monic();
    Poly a = p.primitive();
    Poly b = q.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive();
    }
    return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw ArithmeticError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    const Poly f = p.monic();
    if (f.degree() == 0) return out;
    const Poly df = f.derivative();
    const Poly a0 = gcd(f, df);
    Poly b = divrem(f, a0).first;
    Poly c = divrem(df, a0).first;
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        const Poly a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = divrem(b, a).first;
        c = divrem(d, a).first;
        d = c - b.derivative();
    }
    return out;
}

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& at) {
    int variations = 0;
    int last = 0;
    for (const auto& s : chain) {
        const int sg = s.eval(at).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++variations;
        last = sg;
    }
    return variations;
}

}  // namespace

int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ArithmeticError("root count of the zero polynomial");
    if (hi < lo) return 0;
    Poly s = divrem(p, gcd(p, p.derivative())).first;
    if (s.degree() <= 0) return 0;
    std::vector<Poly> chain{s, s.derivative()};
    while (chain.back().degree() > 0) {
        Poly r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // Rescale by a positive constant only; signs must survive.
        chain.push_back((-r).scaled(r.content().abs().inverse()));
    }
    const int interior = sign_variations(chain, lo) - sign_variations(chain, hi);
    return interior + (s.eval(lo).is_zero() ? 1 : 0);
}

}  // namespace ct
