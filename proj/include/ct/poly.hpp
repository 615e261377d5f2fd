#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ct/rational.hpp"

namespace ct {

/// Dense univariate polynomial over Q. Coefficients are stored ascending in
/// degree with no trailing zeros; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& value);
    /// c * x^degree
    static Poly monomial(const Rational& c, int degree);
    static Poly x() { return monomial(Rational(1), 1); }
    /// x - root
    static Poly linear_factor(const Rational& root);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational eval(const Rational& point) const;
    Poly derivative() const;
    /// this(g(x))
    Poly compose(const Poly& g) const;
    Poly pow(unsigned exponent) const;
    Poly scaled(const Rational& factor) const;
    Poly monic() const;

    /// Positive rational c with this = c * (integer polynomial with gcd of
    /// coefficients 1 and positive leading coefficient). Zero for the zero polynomial.
    Rational content() const;
    Poly primitive() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divrem(const Poly& dividend, const Poly& divisor);

/// Pseudo-remainder: lc(divisor)^(deg(dividend)-deg(divisor)+1) * dividend mod divisor.
Poly pseudo_remainder(const Poly& dividend, const Poly& divisor);

/// Monic gcd computed with a primitive polynomial remainder sequence.
Poly gcd(const Poly& p, const Poly& q);

/// Squarefree decomposition: pairs (factor, multiplicity) with monic
/// pairwise-coprime squarefree factors whose product (with multiplicities)
/// equals monic(p).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Number of distinct real roots of p in the closed interval [lo, hi] (p nonzero).
int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace ct
