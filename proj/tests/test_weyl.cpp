#include <doctest.h>

#include "cherednik/basis.hpp"
#include "cherednik/weyl.hpp"
#include "support.hpp"

using namespace cherednik;

namespace {
LaurentPoly mono(long k, const CoefPoly& a) { return a.is_zero() ? LaurentPoly{} : LaurentPoly{{k, a}}; }
}

TEST_SUITE("weyl") {
    TEST_CASE("hasse examples") {
        CHECK(hasse(0) == WeylOp::identity());
        CHECK(act(hasse(2), 5) == mono(3, 10));
        CHECK(act(hasse(3), 2).empty());
    }

    TEST_CASE("property: hasse values reproduce Pascal's triangle") {
        for (unsigned k = 0; k <= 10; ++k)
            for (long n = 0; n <= 2 * static_cast<long>(k); ++n)
                CHECK(act(hasse(k), n) == mono(n - k, oracle::binom(n, k)));
    }

    TEST_CASE("weyl_compose examples") {
        for (unsigned a = 0; a <= 5; ++a)
            for (unsigned b = 0; b <= 5; ++b) {
                const WeylOp lhs = hasse(a) * hasse(b);
                CHECK(lhs == Rational(oracle::binom(a + b, a)) * hasse(a + b));
                for (long n = 0; n <= 12; ++n)
                    CHECK(act(lhs, n) == mono(n - a - b, Rational(oracle::binom(n, b) * oracle::binom(n - b, a))));
            }
        for (long n = 0; n <= 8; ++n) CHECK(act(weyl_x() * weyl_d(), n) == mono(n, n));
        CHECK(weyl_commutator(weyl_d(), weyl_x()) == WeylOp::identity());
    }

    TEST_CASE("weyl_dp_basis examples") {
        CHECK(weyl_dp_basis(0).size() == 1);
        CHECK(weyl_dp_basis(0)[0].second == WeylOp::identity());
        const auto b1 = weyl_dp_basis(1);
        REQUIRE(b1.size() == 3);
        std::vector<WeylOp> ops;
        for (const auto& [label, q] : b1) ops.push_back(q);
        CHECK(std::find(ops.begin(), ops.end(), weyl_x()) != ops.end());
        CHECK(std::find(ops.begin(), ops.end(), hasse(1)) != ops.end());
        for (unsigned k = 0; k <= 8; ++k) {
            const WeylOp dk = weyl_power(weyl_d(), k);
            CHECK(dk == Rational(factorial(k)) * hasse(k));
            // gcd of P_k(0..k+1) = k(k-1)...(k-k+1)
            Integer g = 0;
            for (long n = 0; n <= static_cast<long>(k) + 1; ++n)
                for (const auto& [e, a] : act(dk, n)) g = gcd(g, oracle::content(a));
            CHECK(weyl_divisor(dk) == g);
            CHECK(g == factorial(k));
        }
    }

    TEST_CASE("property: basis closed under composition with integer constants") {
        const auto basis = weyl_dp_basis(4);
        for (const auto& [la, a] : basis)
            for (const auto& [lb, b] : basis) {
                const auto coords = weyl_decompose(a * b);
                REQUIRE(coords);
                WeylOp rebuilt;
                for (const auto& [label, n] : *coords)
                    rebuilt += Rational(n) * (WeylOp::x_power(static_cast<int>(label.x_power)) * hasse(label.hasse_order));
                CHECK(rebuilt == a * b);
            }
        CHECK_FALSE(weyl_decompose(oracle::q(1, 2) * hasse(1)));
    }

    TEST_CASE("tensor_divisor_check examples") {
        const Operator de = from_word(Word::mul(Word::generator(Generator::Dunkl), Word::generator(Generator::EPlus)),
                                      DunklMode::symbolic());
        const TensorDivisorReport r = tensor_divisor_report(de, weyl_d(), 2);
        CHECK(r.left == 2);
        CHECK(r.right == 1);
        CHECK(r.product == 2);
        CHECK(r.holds);
        CHECK(tensor_divisor_check(de, weyl_d(), 2));
        CHECK(tensor_divisor_check(Operator::e_plus(DunklMode::symbolic()), WeylOp::identity(), 3));
        CHECK_FALSE(tensor_divisor_report(Operator::e_plus(DunklMode::symbolic()), WeylOp::identity(), 3).divides);
        for (unsigned k = 0; k <= 3; ++k) CHECK(tensor_divisor_check(de, hasse(k), 1));
    }

    TEST_CASE("property: tensor divisibility over basis pairs") {
        const auto delta = basis_enumerate(Parity::Plus, 4);
        const auto weyl = weyl_dp_basis(3);
        for (const auto& [la, a] : delta)
            for (const auto& [lb, b] : weyl) {
                const Integer da = operator_divisor(a), db = weyl_divisor(b);
                for (long d : {1, 2, 3, 4, 6, 12}) {
                    const TensorDivisorReport r = tensor_divisor_report(a, b, d, 12);
                    CHECK(r.holds);
                    CHECK(r.product == da * db);
                }
            }
    }

    TEST_CASE("order filter") {
        CHECK(grothendieck_order(WeylOp::identity()) == 0);
        CHECK(grothendieck_order(hasse(3)) == 3);
        CHECK(grothendieck_order(weyl_x() * weyl_d()) == 1);
        for (unsigned k = 1; k <= 5; ++k) {
            CHECK(bracket_lowers_order(hasse(k)));
            CHECK(bracket_lowers_order(weyl_power(weyl_x(), k) * hasse(k)));
            CHECK(grothendieck_order(weyl_commutator(hasse(k), weyl_x())) == static_cast<int>(k) - 1);
        }
    }
}
