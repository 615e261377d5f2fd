#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ct/errors.hpp"
#include "ct/ratfunc.hpp"
#include "test_support.hpp"

using namespace ct;
using ct::testing::Gen;

namespace {

const Poly kX = Poly::x();
Poly lin(long c) { return Poly{Rational(c), Rational(1)}; }  // x + c

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("arithmetic examples") {
        CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
        CHECK(Rational(4, 6).numerator() == 2);
        CHECK(Rational(4, 6).denominator() == 3);
        CHECK(Rational(2) - Rational(1) == Rational(1));
        CHECK(Rational(-3, -6) == Rational(1, 2));
        CHECK(Rational(3, -6).to_string() == "-1/2");
        CHECK(Rational(0, 7).denominator() == 1);
        CHECK(Rational(12, 4).to_string() == "3");
    }

    TEST_CASE("division by zero is an arithmetic error") {
        CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
        CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
        CHECK_THROWS_AS(Rational(0).inverse(), ArithmeticError);
    }

    TEST_CASE("parse") {
        CHECK(Rational::parse("7/21") == Rational(1, 3));
        CHECK(Rational::parse("-5") == Rational(-5));
        CHECK(Rational::parse("0.5") == Rational(1, 2));
        CHECK(Rational::parse("-0.125") == Rational(-1, 8));
        CHECK(Rational::parse("2.") == Rational(2));
        CHECK(Rational::parse(".25") == Rational(1, 4));
        CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
        CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
        CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
        CHECK_THROWS_AS(Rational::parse("."), DomainError);
    }

    TEST_CASE("from_double is exact") {
        CHECK(Rational::from_double(0.375) == Rational(3, 8));
        CHECK(Rational::from_double(0.1) != Rational(1, 10));
    }

    TEST_CASE("ring laws on random inputs") {
        Gen gen(1);
        for (int i = 0; i < 1000; ++i) {
            const Rational a = gen.rational(1000), b = gen.rational(1000), c = gen.rational(1000);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a - a == Rational(0));
            if (!b.is_zero()) REQUIRE((a / b) * b == a);
        }
    }
}

TEST_SUITE("poly") {
    TEST_CASE("arithmetic examples") {
        CHECK(lin(1) * lin(2) == Poly{Rational(2), Rational(3), Rational(1)});
        const auto [q, r] = divrem(Poly{Rational(2), Rational(3), Rational(1)}, lin(1));
        CHECK(q == lin(2));
        CHECK(r.is_zero());
        // x(1 - x)
        CHECK(kX * (Poly::constant(Rational(1)) - kX) == Poly{Rational(0), Rational(1), Rational(-1)});
    }

    TEST_CASE("canonical zero and degree") {
        CHECK(Poly{Rational(0), Rational(0)}.is_zero());
        CHECK(Poly{}.degree() == -1);
        CHECK((lin(1) - lin(1)) == Poly{});
        CHECK(Poly{Rational(1), Rational(0)}.degree() == 0);
    }

    TEST_CASE("divrem by zero throws") { CHECK_THROWS_AS(divrem(lin(1), Poly{}), ArithmeticError); }

    TEST_CASE("divrem invariant on random inputs") {
        Gen gen(2);
        for (int i = 0; i < 500; ++i) {
            const Poly a = gen.poly(8);
            const Poly b = gen.nonzero_poly(5);
            const auto [q, r] = divrem(a, b);
            REQUIRE(q * b + r == a);
            REQUIRE(r.degree() < b.degree());
        }
    }

    TEST_CASE("gcd examples") {
        const Poly x2m1{Rational(-1), Rational(0), Rational(1)};
        CHECK(gcd(x2m1, lin(-1)) == lin(-1));
        CHECK(gcd(lin(2), lin(1)) == Poly::constant(Rational(1)));
        CHECK(gcd(Poly{Rational(4), Rational(2)}, Poly{Rational(4), Rational(2)}) == lin(2));
        CHECK(gcd(Poly{Rational(4), Rational(2)}, Poly{}) == lin(2));
        CHECK_THROWS_AS(gcd(Poly{}, Poly{}), ArithmeticError);
    }

    TEST_CASE("gcd recovers planted common factors") {
        Gen gen(3);
        for (int i = 0; i < 1000; ++i) {
            const Poly g = gen.nonzero_poly(3);
            const Poly p = gen.nonzero_poly(4);
            const Poly q = gen.nonzero_poly(4);
            const Poly d = gcd(p * g, q * g);
            // d = monic(g * gcd(p, q))
            REQUIRE(d == (g * gcd(p, q)).monic());
            REQUIRE(divrem(p * g, d).second.is_zero());
        }
    }

    TEST_CASE("ring laws on random inputs") {
        Gen gen(4);
        for (int i = 0; i < 1000; ++i) {
            const Poly a = gen.poly(5), b = gen.poly(5), c = gen.poly(5);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
        }
    }

    TEST_CASE("compose and eval agree") {
        Gen gen(5);
        for (int i = 0; i < 200; ++i) {
            const Poly f = gen.poly(4), g = gen.poly(3);
            const Rational t = gen.rational();
            REQUIRE(f.compose(g).eval(t) == f.eval(g.eval(t)));
        }
    }

    TEST_CASE("squarefree decomposition") {
        // (x+1)^3 (x+2) (x^2+1)^2
        const Poly x2p1{Rational(1), Rational(0), Rational(1)};
        const Poly p = lin(1).pow(3) * lin(2) * x2p1.pow(2);
        const auto parts = squarefree_decomposition(p.scaled(Rational(5)));
        REQUIRE(parts.size() == 3);
        CHECK(parts[0] == std::pair<Poly, int>{lin(2), 1});
        CHECK(parts[1] == std::pair<Poly, int>{x2p1, 2});
        CHECK(parts[2] == std::pair<Poly, int>{lin(1), 3});
    }

    TEST_CASE("real root counting") {
        const Poly p = lin(-1) * Poly{Rational(-1, 2), Rational(1)} * lin(3);  // roots 1, 1/2, -3
        CHECK(count_real_roots(p, Rational(0), Rational(1)) == 2);
        CHECK(count_real_roots(p, Rational(-5), Rational(5)) == 3);
        CHECK(count_real_roots(p, Rational(1), Rational(2)) == 1);
        CHECK(count_real_roots(p.pow(2), Rational(0), Rational(1, 2)) == 1);
        CHECK(count_real_roots(Poly{Rational(1), Rational(0), Rational(1)}, Rational(-9), Rational(9)) == 0);
        CHECK(count_real_roots(lin(2) * lin(1), Rational(0), Rational(1)) == 0);
    }
}

TEST_SUITE("ratfunc") {
    TEST_CASE("construction cancels and normalizes") {
        const Poly x2m1{Rational(-1), Rational(0), Rational(1)};
        const RatFunc f(x2m1, lin(-1));
        CHECK(f.num() == lin(1));
        CHECK(f.den() == Poly::constant(Rational(1)));
        const RatFunc g(Poly::constant(Rational(3)), Poly{Rational(4), Rational(2)});
        CHECK(g.den() == lin(2));
        CHECK(g.num() == Poly::constant(Rational(3, 2)));
        CHECK_THROWS_AS(RatFunc(lin(1), Poly{}), ArithmeticError);
    }

    TEST_CASE("arithmetic examples") {
        const RatFunc sum = RatFunc(Rational(1)) / RatFunc(lin(1)) + RatFunc(Rational(1)) / RatFunc(lin(2));
        CHECK(sum == RatFunc(Poly{Rational(3), Rational(2)}, Poly{Rational(2), Rational(3), Rational(1)}));

        const Poly xx = kX * (Poly::constant(Rational(1)) - kX);
        const RatFunc r(xx, lin(2) * lin(1));
        CHECK(r.pow(2) == RatFunc(xx * xx, lin(2).pow(2) * lin(1).pow(2)));
        CHECK(r * r == r.pow(2));
        CHECK_THROWS_AS(r / RatFunc(), ArithmeticError);
    }

    TEST_CASE("derivative examples") {
        CHECK(RatFunc(kX * kX).derivative() == RatFunc(Poly{Rational(0), Rational(2)}));
        CHECK(RatFunc(Poly::constant(Rational(1)), lin(1)).derivative() ==
              RatFunc(Poly::constant(Rational(-1)), lin(1).pow(2)));
        CHECK(RatFunc(Rational(7)).derivative().is_zero());
    }

    TEST_CASE("eval examples") {
        CHECK(RatFunc(Poly::constant(Rational(1)), lin(2) * lin(1)).eval(Rational(0)) == Rational(1, 2));
        const Poly xx = kX * (Poly::constant(Rational(1)) - kX);
        CHECK(RatFunc(xx, lin(3)).eval(Rational(1)).is_zero());
        CHECK_THROWS_AS(RatFunc(Poly::constant(Rational(1)), lin(1)).eval(Rational(-1)), PoleError);
    }

    TEST_CASE("compose examples") {
        const Poly u = Poly::x();
        const RatFunc map(Poly{Rational(1), Rational(-1)}, lin(1));  // (1-u)/(1+u)
        CHECK(RatFunc(kX * kX).compose(map) ==
              RatFunc(Poly{Rational(1), Rational(-1)}.pow(2), lin(1).pow(2)));
        Gen gen(6);
        for (int i = 0; i < 50; ++i) {
            const RatFunc f = gen.ratfunc(3);
            CHECK(f.compose(RatFunc(u)) == f);
        }
        CHECK(RatFunc(Poly::constant(Rational(1)), kX).compose(map) == RatFunc(lin(1), Poly{Rational(1), Rational(-1)}));
        // 1/x composed with the constant 0 has no denominator left.
        CHECK_THROWS_AS(RatFunc(Poly::constant(Rational(1)), kX).compose(RatFunc()), ArithmeticError);
    }

    TEST_CASE("field laws and canonicality on random inputs") {
        Gen gen(7);
        for (int i = 0; i < 1000; ++i) {
            const RatFunc f = gen.nonzero_ratfunc(3);
            const RatFunc g = gen.ratfunc(3);
            const RatFunc h = gen.ratfunc(3);
            REQUIRE(f * f.inverse() == RatFunc(Rational(1)));
            REQUIRE((f + g) + h == f + (g + h));
            REQUIRE(f * (g + h) == f * g + f * h);
            const Poly common = gen.nonzero_poly(2);
            REQUIRE(RatFunc(f.num() * common, f.den() * common) == f);
        }
    }

    TEST_CASE("derivative is linear and obeys the product rule") {
        Gen gen(8);
        for (int i = 0; i < 1000; ++i) {
            const RatFunc f = gen.ratfunc(3);
            const RatFunc g = gen.ratfunc(3);
            const Rational c = gen.rational();
            REQUIRE((f * g).derivative() == f * g.derivative() + g * f.derivative());
            REQUIRE((RatFunc(c) * f + g).derivative() == RatFunc(c) * f.derivative() + g.derivative());
        }
    }

    TEST_CASE("eval commutes with arithmetic away from poles") {
        Gen gen(9);
        int checked = 0;
        for (int i = 0; i < 1000; ++i) {
            const RatFunc f = gen.ratfunc(3);
            const RatFunc g = gen.ratfunc(3);
            const Rational t = gen.rational();
            try {
                const Rational ft = f.eval(t);
                const Rational gt = g.eval(t);
                REQUIRE((f + g).eval(t) == ft + gt);
                REQUIRE((f * g).eval(t) == ft * gt);
                ++checked;
            } catch (const PoleError&) {
            }
        }
        CHECK(checked > 900);
    }

    TEST_CASE("composition is associative where defined") {
        Gen gen(10);
        int checked = 0;
        for (int i = 0; i < 300; ++i) {
            const RatFunc f = gen.ratfunc(2, 5);
            const RatFunc g = gen.ratfunc(2, 5);
            const RatFunc h = gen.ratfunc(2, 5);
            try {
                const RatFunc left = f.compose(g).compose(h);
                const RatFunc right = f.compose(g.compose(h));
                REQUIRE(left == right);
                ++checked;
            } catch (const ArithmeticError&) {
            }
        }
        CHECK(checked > 200);
    }
}
