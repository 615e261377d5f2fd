#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ct/errors.hpp"
#include "ct/quadrature.hpp"
#include "ct/rational_integration.hpp"
#include "test_support.hpp"

using namespace ct;

namespace {

const ParameterPair kP21(Rational(2), Rational(1));

}  // namespace

TEST_CASE("simple integrals") {
    const auto r = quad_01(RatFunc(Poly::x()), 1e-12);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.subdivisions >= 1);
    CHECK(quad_01(RatFunc(), 1e-12).value == 0.0);
}

TEST_CASE("integrands at (2,1)") {
    const double log43 = 0.287682072451780927439219005993827431503509711;
    const double r1 = 0.0137745071624664920745330419567920205245679762843273955466597974450;
    CHECK(std::abs(quad_01(make_left_family(kP21).at(0), 1e-12).value - log43) < 1e-12);
    CHECK(std::abs(quad_01(make_right_family(kP21).at(1), 1e-12).value - r1) < 1e-12);
    CHECK(std::abs(quad_01(make_left_family(kP21).at(1), 1e-12).value - r1) < 1e-12);
}

TEST_CASE("embedded Gauss rule is exact through degree 13") {
    ct::testing::Gen gen(51);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> c;
        for (int k = 0; k <= 13; ++k) c.push_back(gen.rational(9));
        const Poly poly(std::move(c));
        const RatFunc f(poly);
        const double lo = static_cast<double>(gen.integer(-4, 0)) / 4.0;
        const double hi = lo + 0.5;
        // exact integral via the antiderivative
        std::vector<Rational> anti{Rational(0)};
        for (int k = 0; k <= poly.degree(); ++k) anti.push_back(poly.coeff(k) / Rational(k + 1));
        const Poly prim(std::move(anti));
        const double exact = (prim.eval(Rational::from_double(hi)) - prim.eval(Rational::from_double(lo))).to_double();
        const RatFuncEvaluator eval(f);
        const auto panel = gauss_kronrod_15([&](double x) { return eval(x); }, lo, hi);
        REQUIRE(std::abs(panel.gauss - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
        REQUIRE(std::abs(panel.kronrod - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("double-double evaluation survives cancellation") {
    // (x - 1)^20 expanded has coefficients up to 184756
    const RatFunc f(Poly::linear_factor(Rational(1)).pow(20));
    const RatFuncEvaluator eval(f);
    CHECK(eval(0.75) == doctest::Approx(std::pow(0.25, 20)).epsilon(1e-12));
}

TEST_CASE("argument and convergence errors") {
    CHECK_THROWS_AS(quad_01(RatFunc(Poly::x()), 1e-15), DomainError);
    CHECK_THROWS_AS(quad_01(RatFunc(Poly::constant(Rational(1)), Poly::linear_factor(Rational(1, 2))), 1e-12),
                    DivergentIntegralError);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
    // 1/(x + 1e-6) has a near-singularity that a handful of panels cannot resolve.
    const RatFunc spike(Poly::constant(Rational(1)), Poly{Rational(1, 1000000), Rational(1)});
    try {
        quad_01(spike, 1e-14, 4);
        FAIL("expected ToleranceNotMet");
    } catch (const ToleranceNotMet& e) {
        CHECK(e.subdivisions() == 4);
        CHECK(e.error_estimate() >= 1e-14);
        CHECK(std::isfinite(e.best_value()));
    }
    // The default cap resolves it.
    CHECK(quad_01(spike, 1e-10).value == doctest::Approx(std::log(1e6 + 1)).epsilon(1e-10));
}

TEST_CASE("deterministic results") {
    const RatFunc f = make_left_family(ParameterPair(Rational(7, 3), Rational(1, 5))).at(6);
    const auto a = quad_01(f, 1e-13);
    const auto b = quad_01(f, 1e-13);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.subdivisions == b.subdivisions);
}
