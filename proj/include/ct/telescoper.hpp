#pragma once

#include <vector>

#include "ct/integrand.hpp"
#include "ct/linalg.hpp"

namespace ct {

/// sum_{k=0}^{order} c_k(n) y(n+k) = 0, with each c_k a polynomial in n.
class Recurrence {
public:
    /// Requires at least two coefficients and a nonzero leading c_order.
    explicit Recurrence(std::vector<Poly> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    std::vector<Rational> at(long n) const;
    int max_degree() const;

    /// Multiplier that makes the coefficients integer polynomials with joint
    /// content 1 and a positive leading coefficient of c_order.
    /// normalized() == scaled(normalization_factor()).
    Rational normalization_factor() const;
    Recurrence normalized() const;
    Recurrence scaled(const Rational& factor) const;

    friend bool operator==(const Recurrence&, const Recurrence&) = default;

private:
    std::vector<Poly> coeffs_;
};

/// R(n, x) = sum_j n^j parts[j](x). Every part vanishes at x = 0 and x = 1
/// (its numerator carries x(x-1), or it evaluates to zero there).
class Certificate {
public:
    explicit Certificate(std::vector<RatFunc> parts);

    const std::vector<RatFunc>& parts() const { return parts_; }
    /// Highest power of n present (0 for n-free certificates).
    int n_degree() const { return static_cast<int>(parts_.size()) - 1; }
    RatFunc at(long n) const;
    Certificate scaled(const Rational& factor) const;

    friend bool operator==(const Certificate&, const Certificate&) = default;

private:
    std::vector<RatFunc> parts_;
};

/// True iff sum_k c_k(n) r^k == R'(n,x) + R(n,x) (c'/c + n r'/r) exactly,
/// i.e. sum_k c_k(n) F(n+k,x) = d/dx(R(n,x) F(n,x)) divided through by F.
bool verify_telescoping(const IntegrandFamily& family, const Recurrence& rec, const Certificate& cert, unsigned n);

/// verify_telescoping at n = 0, 1, ..., degree_bound.
bool verify_telescoping_all_n(const IntegrandFamily& family, const Recurrence& rec, const Certificate& cert,
                              unsigned degree_bound);

/// Degree in n of the divided telescoping identity; checking one more point
/// than this proves it for every n.
unsigned telescoping_degree(const Recurrence& rec, const Certificate& cert);

struct Telescoper {
    Recurrence recurrence;
    Certificate certificate;
    /// Degree bound in n that was used for the final verification.
    unsigned verified_degree_bound = 0;
};

/// Searches for the lowest-order recurrence (and certificate of the form
/// x(x-1) M(n,x) / Q(x), Q = denominator of the cofactor) with the smallest
/// certificate degree. Throws AnsatzExhausted when nothing is found.
Telescoper discover(const IntegrandFamily& family, int max_order, int max_cert_degree);

}  // namespace ct
