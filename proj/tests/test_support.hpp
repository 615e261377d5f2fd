#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ct/bigfloat.hpp"
#include "ct/integrand.hpp"
#include "ct/ratfunc.hpp"

namespace ct::testing {

inline constexpr std::uint64_t kDefaultSeed = 20191112;

/// Decimal literal (from an independent high-precision oracle) as a BigFloat.
inline BigFloat oracle(const char* digits, long precision_bits = 256) {
    BigFloat v(precision_bits);
    mpfr_set_str(v.raw(), digits, 10, MPFR_RNDN);
    return v;
}

/// |x - y| <= 2^-bits * max(1, |y|)
inline bool close_bits(const BigFloat& x, const BigFloat& y, long bits) {
    BigFloat scale = y.abs();
    if (scale < BigFloat(1.0, scale.precision())) scale = BigFloat(1.0, scale.precision());
    BigFloat tol(1.0, y.precision());
    mpfr_mul_2si(tol.raw(), tol.raw(), -bits, MPFR_RNDN);
    return (x - y).abs() <= tol * scale;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// numerator in [-bound, bound], denominator in [1, bound]
    Rational rational(long bound = 9) { return {integer(-bound, bound), integer(1, bound)}; }
    Rational positive_rational(long bound = 50) { return {integer(1, bound), integer(1, bound)}; }
    Rational nonzero_rational(long bound = 9) {
        Rational r;
        while (r.is_zero()) r = rational(bound);
        return r;
    }

    /// a > b > 0 with numerators and denominators <= bound.
    ParameterPair params(long bound = 50) {
        for (;;) {
            Rational x = positive_rational(bound);
            Rational y = positive_rational(bound);
            if (x == y) continue;
            if (x < y) std::swap(x, y);
            return {x, y};
        }
    }

    Poly poly(int max_degree, long bound = 9) {
        std::vector<Rational> c;
        const long deg = integer(-1, max_degree);
        for (long i = 0; i <= deg; ++i) c.push_back(rational(bound));
        return Poly(std::move(c));
    }

    Poly nonzero_poly(int max_degree, long bound = 9) {
        Poly p;
        while (p.is_zero()) p = poly(max_degree, bound);
        return p;
    }

    RatFunc ratfunc(int max_degree, long bound = 9) { return {poly(max_degree, bound), nonzero_poly(max_degree, bound)}; }

    RatFunc nonzero_ratfunc(int max_degree, long bound = 9) {
        return {nonzero_poly(max_degree, bound), nonzero_poly(max_degree, bound)};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ct::testing
