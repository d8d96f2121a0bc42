#include <doctest.h>

#include "cherednik/errors.hpp"
#include "cherednik/poly.hpp"
#include "support.hpp"

using namespace cherednik;
using oracle::c;
using oracle::q;

namespace {
const ActionPoly t = ActionPoly::variable();
}

TEST_SUITE("poly_core") {
    TEST_CASE("binomial_poly") {
        CHECK(binomial_poly(0) == ActionPoly(1));
        CHECK(binomial_poly(2) == t * t * CoefPoly(q(1, 2)) - t * CoefPoly(q(1, 2)));
        CHECK(binomial_poly(3).eval(5L) == CoefPoly(10));
        for (unsigned k = 0; k <= 8; ++k) {
            CHECK(binomial_poly(k).degree() == static_cast<int>(k));
            CHECK(binomial_poly(k).leading() == CoefPoly(make_rational(1, factorial(k))));
            for (long n = -4; n <= 12; ++n) CHECK(binomial_poly(k).eval(n) == CoefPoly(oracle::binom(n, k)));
        }
    }

    TEST_CASE("falling_product") {
        CHECK(falling_product({}) == ActionPoly(1));
        const ActionPoly a = t * CoefPoly(2);
        const ActionPoly b = ActionPoly::affine(2, CoefPoly(-1) - c() * Rational(2));
        const std::vector<ActionPoly> two{a, b};
        // 4t^2 - 2t - 4ct
        CHECK(falling_product(two) == t * t * CoefPoly(4) - t * CoefPoly(2) - t * (c() * Rational(4)));
        const std::vector<ActionPoly> one{ActionPoly::affine(2, CoefPoly(1) - c() * Rational(2))};
        CHECK(falling_product(one) == one[0]);
        const std::vector<ActionPoly> bad{t * t};
        CHECK_THROWS_AS(falling_product(bad), PreconditionError);
    }

    TEST_CASE("to_newton / from_newton examples") {
        CHECK(to_newton(t * t + t) == std::vector<CoefPoly>{0, 2, 2});
        CHECK(to_newton(ActionPoly(1)) == std::vector<CoefPoly>{1});
        CHECK(to_newton(t * CoefPoly(2) - ActionPoly(c() * Rational(2))) ==
              std::vector<CoefPoly>{c() * Rational(-2), 2});
        CHECK(to_newton(ActionPoly()).empty());
        const std::vector<CoefPoly> a{0, 2, 2}, b{1}, d{0, 0, 2};
        CHECK(from_newton(a) == t * t + t);
        CHECK(from_newton(b) == ActionPoly(1));
        CHECK(from_newton(d) == t * t - t);
    }

    TEST_CASE("integer_content") {
        CHECK(integer_content(t * t * CoefPoly(4) - t * CoefPoly(2) - t * (c() * Rational(4))) == 2);
        CHECK(integer_content(ActionPoly()) == 0);
        CHECK(integer_content(ActionPoly::affine(2, CoefPoly(1) - c() * Rational(2))) == 1);
        CHECK_THROWS_AS(integer_content(t * CoefPoly(q(1, 2))), NonIntegralInput);
    }

    TEST_CASE("rendering") {
        CHECK(CoefPoly(c() * Rational(2) - CoefPoly(1)).to_string() == "2*c - 1");
        CHECK(CoefPoly().to_string() == "0");
        CHECK((t * t * CoefPoly(4) - t * CoefPoly(2) - t * (c() * Rational(4))).to_string() == "4*t^2 - 4*c*t - 2*t");
    }

    TEST_CASE("property: Newton round trip and evaluation, seeded") {
        oracle::Rng rng(11);
        for (int i = 0; i < 150; ++i) {
            ActionPoly f = oracle::random_poly(rng, 12, 2, 30);
            f = f / Rational(oracle::uniform(rng, 1, 7));
            const auto alpha = to_newton(f);
            REQUIRE(from_newton(alpha) == f);
            const ActionPoly g = from_newton(alpha);
            for (long n = 0; n <= f.degree() + 3; ++n) CHECK(g.eval(n) == oracle::eval(f, n));
        }
    }

    TEST_CASE("property: content is multiplicative under integer scaling") {
        oracle::Rng rng(12);
        for (int i = 0; i < 100; ++i) {
            const ActionPoly f = oracle::random_poly(rng, 6, 2, 40);
            const long m = oracle::uniform(rng, -20, 20);
            CHECK(integer_content(f * CoefPoly(m)) == abs(Integer(m)) * integer_content(f));
        }
    }

    TEST_CASE("property: Pascal matrix has an integral inverse") {
        // Column i of the inverse of L = [C(i, j)] holds the Newton coordinates
        // of the polynomial taking value 1 at t = i and 0 at the other nodes.
        const int n = 16;
        for (int i = 0; i <= n; ++i) {
            ActionPoly lagrange(1);
            Rational denom = 1;
            for (int k = 0; k <= n; ++k) {
                if (k == i) continue;
                lagrange = lagrange * (t - ActionPoly(k));
                denom *= i - k;
            }
            lagrange = lagrange / denom;
            const auto alpha = to_newton(lagrange);
            REQUIRE(alpha.size() == static_cast<std::size_t>(n + 1));
            for (int j = 0; j <= n; ++j) {
                CHECK(alpha[j].is_constant());
                CHECK(is_integer(alpha[j].constant_term()));
                // L * L^{-1} = I, row j: sum_k C(j, k) alpha_k = delta_{ij}
                Rational s = 0;
                for (int k = 0; k <= j; ++k) s += oracle::binom(j, static_cast<unsigned>(k)) * alpha[k].constant_term();
                CHECK(s == (i == j ? 1 : 0));
            }
        }
    }

    TEST_CASE("ActionPoly algebra") {
        const ActionPoly f = t * t * CoefPoly(3) + ActionPoly(c());
        CHECK(f.shifted(1) == (t + ActionPoly(1)) * (t + ActionPoly(1)) * CoefPoly(3) + ActionPoly(c()));
        CHECK(f.derivative() == t * CoefPoly(6));
        CHECK(f.specialize_c(2) == t * t * CoefPoly(3) + ActionPoly(2));
        auto [quo, rem] = (t * t - ActionPoly(1)).divmod(t - ActionPoly(1));
        CHECK(quo == t + ActionPoly(1));
        CHECK(rem.is_zero());
        CHECK(f.eval(ActionPoly::variable().eval(0L) + c()) == c() * c() * Rational(3) + c());
    }
}
