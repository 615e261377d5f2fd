#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ct/errors.hpp"
#include "ct/prover.hpp"
#include "ct/rational_integration.hpp"
#include "ct/telescoper.hpp"
#include "test_support.hpp"

using namespace ct;

namespace {

const ParameterPair kP21(Rational(2), Rational(1));

Poly p(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

Recurrence rec21() { return Recurrence({p({1, 1}), p({-21, -14}), p({2, 1})}); }

Certificate cert_left21() { return Certificate({RatFunc(p({0, 2, -6, 0, 4}), p({2, 3, 1}))}); }
Certificate cert_right21() { return Certificate({RatFunc(p({0, 3, -9, 5, 1}), p({3, 1}))}); }

// sum_k c_k(n) I(n+k) with I computed by exact integration.
LogCombination recurrence_residual(const IntegrandFamily& fam, const Recurrence& rec, unsigned n) {
    LogCombination sum;
    const auto c = rec.at(static_cast<long>(n));
    for (int k = 0; k <= rec.order(); ++k) {
        sum += c[static_cast<std::size_t>(k)] * integrate_01(fam.at(n + static_cast<unsigned>(k)));
    }
    return sum;
}

}  // namespace

TEST_CASE("recurrence and certificate construction") {
    CHECK_THROWS_AS(Recurrence({p({1})}), DomainError);
    CHECK_THROWS_AS(Recurrence({p({1}), Poly()}), DomainError);
    CHECK(rec21().order() == 2);
    CHECK(rec21().max_degree() == 1);
    CHECK(rec21().at(0) == std::vector<Rational>{1, -21, 2});
    CHECK(rec21().scaled(Rational(-3, 2)).normalized() == rec21());

    CHECK_THROWS_AS(Certificate({RatFunc(p({1, 1}), p({3, 1}))}), DomainError);
    CHECK_NOTHROW(Certificate({RatFunc()}));
    const Certificate two({RatFunc(p({0, -1, 1})), RatFunc(p({0, -2, 2}))});
    CHECK(two.n_degree() == 1);
    CHECK(two.at(3) == RatFunc(p({0, -7, 7})));
}

TEST_CASE("known certificates at (2,1)") {
    const auto left = make_left_family(kP21);
    const auto right = make_right_family(kP21);
    CHECK(closed_form_left_certificate(kP21) == cert_left21());
    CHECK(closed_form_right_certificate(kP21) == cert_right21());
    CHECK(closed_form_recurrence(kP21) == rec21());

    CHECK(verify_telescoping(left, rec21(), cert_left21(), 0));
    CHECK_FALSE(verify_telescoping(left, rec21(), cert_left21().scaled(Rational(-1)), 0));
    for (unsigned n = 0; n <= 3; ++n) CHECK(verify_telescoping(right, rec21(), cert_right21(), n));
    CHECK(verify_telescoping_all_n(left, rec21(), cert_left21(), telescoping_degree(rec21(), cert_left21()) + 1));

    auto coeffs = rec21().coeffs();
    coeffs[1] = coeffs[1] + Poly::constant(Rational(1));
    CHECK_FALSE(verify_telescoping_all_n(left, Recurrence(coeffs), cert_left21(), 3));
    CHECK(telescoping_degree(rec21(), cert_left21()) == 1);
}

TEST_CASE("discovery at (2,1)") {
    const auto left = discover(make_left_family(kP21), 2, 4);
    CHECK(left.recurrence == rec21());
    CHECK(left.certificate == cert_left21());
    const auto right = discover(make_right_family(kP21), 2, 4);
    CHECK(right.recurrence == rec21());
    CHECK(right.certificate == cert_right21());
}

TEST_CASE("discovery on the beta family") {
    // integral of x^n (1-x)^n is n!^2/(2n+1)!, so (n+1) I(n) = (4n+6) I(n+1)
    const IntegrandFamily beta(RatFunc(Rational(1)), RatFunc(p({0, 1, -1})));
    const auto t = discover(beta, 1, 4);
    CHECK(t.recurrence == Recurrence({p({-1, -1}), p({6, 4})}));
    for (unsigned n = 0; n <= 5; ++n) CHECK(recurrence_residual(beta, t.recurrence, n).is_zero());
}

TEST_CASE("discovery limits") {
    const auto left = make_left_family(kP21);
    CHECK_THROWS_AS(discover(left, 0, 4), DomainError);
    CHECK_THROWS_AS(discover(left, 2, 0), DomainError);
    try {
        discover(left, 1, 4);
        FAIL("expected AnsatzExhausted");
    } catch (const AnsatzExhausted& e) {
        CHECK(e.max_order() == 1);
        CHECK(e.max_cert_degree() == 4);
    }
}

TEST_CASE("random pairs: discovered recurrences are sound and shared") {
    ct::testing::Gen gen(13);
    for (int i = 0; i < 25; ++i) {
        const ParameterPair params = gen.params();
        const auto left_fam = make_left_family(params);
        const auto right_fam = make_right_family(params);
        const auto left = discover(left_fam, 2, 4);
        const auto right = discover(right_fam, 2, 4);
        REQUIRE(left.recurrence == right.recurrence);
        REQUIRE(left.recurrence.order() == 2);
        REQUIRE(verify_telescoping_all_n(left_fam, left.recurrence, left.certificate, 20));
        REQUIRE(verify_telescoping_all_n(right_fam, right.recurrence, right.certificate, 20));
        // Completeness: the recurrence agrees with the closed form up to scaling.
        REQUIRE(left.recurrence == closed_form_recurrence(params).normalized());
        for (unsigned n = 0; n <= 2; ++n) {
            REQUIRE(recurrence_residual(left_fam, left.recurrence, n).is_zero());
            REQUIRE(recurrence_residual(right_fam, right.recurrence, n).is_zero());
        }
    }
}

TEST_CASE("mutated certificates and recurrences are rejected") {
    ct::testing::Gen gen(14);
    int attempted = 0;
    int rejected = 0;
    for (int i = 0; i < 120; ++i) {
        const ParameterPair params = gen.params(20);
        const bool use_left = i % 2 == 0;
        const auto fam = use_left ? make_left_family(params) : make_right_family(params);
        Recurrence rec = closed_form_recurrence(params);
        Certificate cert = use_left ? closed_form_left_certificate(params) : closed_form_right_certificate(params);
        const Rational delta = gen.nonzero_rational(5);
        if (i % 4 < 2) {
            auto coeffs = rec.coeffs();
            auto& target = coeffs[static_cast<std::size_t>(gen.integer(0, 2))];
            std::vector<Rational> c(target.coefficients().begin(), target.coefficients().end());
            c.resize(2);
            c[static_cast<std::size_t>(gen.integer(0, 1))] += delta;
            target = Poly(std::move(c));
            if (target.is_zero()) continue;
            rec = Recurrence(std::move(coeffs));
        } else {
            // add delta x^j x(x-1)/Q to the numerator cofactor
            const RatFunc& part = cert.parts()[0];
            const Poly bump = Poly::monomial(delta, gen.integer(0, 2)) * p({0, -1, 1});
            cert = Certificate({part + RatFunc(bump, part.den())});
        }
        ++attempted;
        const unsigned bound = telescoping_degree(rec, cert) + 1;
        if (!verify_telescoping_all_n(fam, rec, cert, bound)) ++rejected;
    }
    CHECK(attempted >= 100);
    CHECK(rejected == attempted);
}
