#include "ct/rational_integration.hpp"

#include <algorithm>
#include <optional>

#include "ct/errors.hpp"
#include "ct/integrand.hpp"

namespace ct {

namespace {

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : factorize(abs(n))) {
        const std::size_t count = out.size();
        BigInt power = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

// A rational root of the integer polynomial p (deg >= 3, p(0) != 0), if any.
std::optional<Rational> find_rational_root(const Poly& p) {
    const BigInt c0 = p.coeff(0).numerator();
    const BigInt lead = p.leading().numerator();
    for (const auto& num : divisors(c0)) {
        for (const auto& den : divisors(lead)) {
            for (int sign : {1, -1}) {
                const Rational candidate(num * sign, den);
                if (p.eval(candidate).is_zero()) return candidate;
            }
        }
    }
    return std::nullopt;
}

std::vector<Rational> roots_of_squarefree(const Poly& factor) {
    std::vector<Rational> roots;
    Poly p = factor.primitive();
    auto fail = [&]() -> std::vector<Rational> {
        throw NonRationalRootError("non-rational root: irreducible factor " + p.to_string());
    };
    while (p.degree() >= 1) {
        if (p.degree() == 1) {
            roots.push_back(-p.coeff(0) / p.coeff(1));
            break;
        }
        if (p.coeff(0).is_zero()) {
            roots.emplace_back(0);
            p = divrem(p, Poly::x()).first.primitive();
            continue;
        }
        if (p.degree() == 2) {
            const BigInt a = p.coeff(2).numerator();
            const BigInt b = p.coeff(1).numerator();
            const BigInt c = p.coeff(0).numerator();
            const BigInt disc = b * b - 4 * a * c;
            if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) return fail();
            BigInt root_disc;
            mpz_sqrt(root_disc.get_mpz_t(), disc.get_mpz_t());
            roots.emplace_back(BigInt(-b - root_disc), BigInt(2 * a));
            roots.emplace_back(BigInt(-b + root_disc), BigInt(2 * a));
            break;
        }
        const auto root = find_rational_root(p);
        if (!root) return fail();
        roots.push_back(*root);
        p = divrem(p, Poly::linear_factor(*root)).first.primitive();
    }
    return roots;
}

// First `count` Taylor coefficients of num/den around t = 0 (den(0) != 0).
std::vector<Rational> series_quotient(const Poly& num, const Poly& den, int count) {
    std::vector<Rational> out(static_cast<std::size_t>(count));
    const Rational inv0 = den.coeff(0).inverse();
    for (int i = 0; i < count; ++i) {
        Rational acc = num.coeff(i);
        for (int j = 1; j <= i; ++j) acc -= den.coeff(j) * out[static_cast<std::size_t>(i - j)];
        out[static_cast<std::size_t>(i)] = acc * inv0;
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
    std::vector<std::pair<Rational, int>> out;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        for (auto& root : roots_of_squarefree(factor)) out.emplace_back(std::move(root), multiplicity);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RatFunc PartialFractionForm::reassemble() const {
    RatFunc sum(polynomial_part);
    for (const auto& term : pole_terms) {
        sum += RatFunc(Poly::constant(term.coefficient),
                       Poly::linear_factor(term.root).pow(static_cast<unsigned>(term.multiplicity)));
    }
    return sum;
}

PartialFractionForm partial_fractions(const RatFunc& f) {
    auto [quotient, remainder] = divrem(f.num(), f.den());
    PartialFractionForm form{std::move(quotient), {}};
    if (remainder.is_zero()) return form;
    for (const auto& [root, multiplicity] : rational_roots(f.den())) {
        // With den = (x - root)^m G, the coefficients of (x - root)^-(m-i) are the
        // Taylor coefficients of remainder/G at root.
        const Poly cofactor = divrem(f.den(), Poly::linear_factor(root).pow(static_cast<unsigned>(multiplicity))).first;
        const Poly shift{root, Rational(1)};
        const auto series = series_quotient(remainder.compose(shift), cofactor.compose(shift), multiplicity);
        for (int i = 0; i < multiplicity; ++i) {
            const Rational& c = series[static_cast<std::size_t>(i)];
            if (!c.is_zero()) form.pole_terms.push_back({root, multiplicity - i, c});
        }
    }
    std::sort(form.pole_terms.begin(), form.pole_terms.end(), [](const PoleTerm& l, const PoleTerm& r) {
        return l.root != r.root ? l.root < r.root : l.multiplicity < r.multiplicity;
    });
    return form;
}

LogCombination integrate_01(const RatFunc& f) {
    if (!pole_free_on_unit_interval(f)) throw DivergentIntegralError("divergent integral: pole in [0,1] of " + f.to_string());
    const PartialFractionForm form = partial_fractions(f);
    LogCombination value;
    Rational polynomial_value;
    for (int i = 0; i <= form.polynomial_part.degree(); ++i) {
        polynomial_value += form.polynomial_part.coeff(i) / Rational(i + 1);
    }
    value += LogCombination(polynomial_value);
    const Rational one(1);
    for (const auto& term : form.pole_terms) {
        const Rational at_one = one - term.root;
        const Rational at_zero = -term.root;
        if (term.multiplicity == 1) {
            // integral of 1/(x - r) over [0,1] = log|1 - r| - log|r|
            value += LogCombination::log_of(at_one.abs() / at_zero.abs()).scaled(term.coefficient);
        } else {
            const unsigned k = static_cast<unsigned>(term.multiplicity - 1);
            const Rational antiderivative_diff = at_one.pow(k).inverse() - at_zero.pow(k).inverse();
            value += LogCombination(term.coefficient * antiderivative_diff / Rational(-static_cast<long>(k)));
        }
    }
    return value;
}

}  // namespace ct
