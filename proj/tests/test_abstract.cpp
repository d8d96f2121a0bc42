#include <doctest.h>

#include "cherednik/abstract.hpp"
#include "cherednik/basis.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/parser.hpp"
#include "support.hpp"

using namespace cherednik;
using oracle::c;
using oracle::q;

namespace {
const DunklMode sym = DunklMode::symbolic();
Operator op(std::string_view text, const DunklMode& mode = sym) { return from_word(parse(text), mode); }
// d/dx as a Laurent operator
Operator plain_derivative(const DunklMode& mode) {
    const ActionPoly t = ActionPoly::variable();
    return Operator::piece(mode, -1, t * CoefPoly(2), t * CoefPoly(2) + ActionPoly(1));
}
}  // namespace

TEST_SUITE("abstract") {
    TEST_CASE("act_on_shifted examples") {
        for (long j = 0; j <= 6; ++j)
            CHECK(act_on_shifted(Operator::x(sym), j) == std::vector<ShiftedModuleElement>{{j + 1, 1}});
        const DunklMode three = DunklMode::numeric(3);
        try {
            act_on_shifted(plain_derivative(three), 0);
            FAIL("expected OutOfModule");
        } catch (const OutOfModule& e) {
            CHECK(e.index() == -1);
        }
        CHECK(shifted_image(plain_derivative(sym), 0) == ShiftedImage{{-1, c() * Rational(2)}});
        CHECK(act_on_shifted(Operator::dunkl(sym), 0).empty());
        // d mu_j = (j + 2c) mu_{j-1}
        for (long j = 1; j <= 6; ++j)
            CHECK(act_on_shifted(plain_derivative(sym), j) ==
                  std::vector<ShiftedModuleElement>{{j - 1, CoefPoly(j) + c() * Rational(2)}});
    }

    TEST_CASE("property: shifted action matches act at half-integer c") {
        // With 1 + 2c = 2m even, mu_j = x^{j + 2c} literally, so act() gives the answer.
        oracle::Rng rng(51);
        for (long m : {1, 2, 3}) {
            const Rational cv = q(2 * m - 1, 2);
            const DunklMode mode = DunklMode::numeric(cv);
            for (int i = 0; i < 20; ++i) {
                const Word w = oracle::random_monomial_word(rng, static_cast<int>(oracle::uniform(rng, 1, 5)));
                const Operator qop = from_word(w, mode);
                const long shift = 2 * m - 1;
                for (long j = 0; j <= 10; ++j) {
                    ShiftedImage via_act;
                    for (const auto& [e, a] : act(qop, j + shift)) via_act[e - shift] = a;
                    CHECK(shifted_image(qop, j) == via_act);
                }
            }
        }
    }

    TEST_CASE("in_Hc examples") {
        CHECK(in_Hc(Operator::dunkl(sym)));
        CHECK_FALSE(in_Hc(plain_derivative(DunklMode::numeric(1))));
        CHECK(in_Hc(delta_basis(Parity::Plus, 2, 0, DunklMode::numeric(0))));
        CHECK(in_Hc(op("x*D*e+")));
        CHECK_FALSE(in_Hc(op("x^-1")));
        CHECK_FALSE(in_Hc(q(1, 2) * Operator::x(DunklMode::numeric(2))));
    }

    TEST_CASE("four_component_split examples") {
        const FourComponents d = four_component_split(Operator::dunkl(sym));
        CHECK(d.b.is_zero());
        CHECK(d.b_bar.is_zero());
        CHECK(d.a == op("e-*D"));
        CHECK(d.a_bar == op("e+*D"));
        CHECK(d.all_ok());
        const FourComponents e = four_component_split(Operator::e_plus(sym));
        CHECK(e.b == Operator::e_plus(sym));
        CHECK(e.b_bar.is_zero());
        CHECK(e.a.is_zero());
        CHECK(e.a_bar.is_zero());
        const FourComponents xd = four_component_split(op("x*D"));
        CHECK_FALSE(xd.b.is_zero());
        CHECK_FALSE(xd.b_bar.is_zero());
        CHECK(xd.a.is_zero());
        CHECK(xd.a_bar.is_zero());
        CHECK_FALSE(four_component_split(plain_derivative(DunklMode::numeric(1))).all_ok());
    }

    TEST_CASE("property: components sum to Q and splitting is idempotent") {
        oracle::Rng rng(52);
        for (int i = 0; i < 30; ++i) {
            const Operator qop = from_word(oracle::random_monomial_word(rng, static_cast<int>(oracle::uniform(rng, 1, 5))), sym);
            const FourComponents s = four_component_split(qop);
            CHECK(s.sum() == qop);
            for (const Operator* part : {&s.b, &s.b_bar, &s.a, &s.a_bar}) {
                const FourComponents again = four_component_split(*part);
                CHECK(again.sum() == *part);
                int nonzero = 0;
                for (const Operator* p : {&again.b, &again.b_bar, &again.a, &again.a_bar}) nonzero += !p->is_zero();
                CHECK(nonzero <= 1);
            }
            CHECK(s.all_ok() == in_Hc(qop));
        }
    }

    TEST_CASE("log_act examples") {
        CHECK(log_act(weyl_d(), 3) == LogValue{1, 3});
        for (long n : {-3, 0, 4}) CHECK(log_act(weyl_x(), n) == LogValue{0, 1});
        CHECK(log_act(weyl_x() * weyl_d(), 0) == LogValue{1, 0});
        CHECK_THROWS_AS(log_act(weyl_x() + weyl_d(), 0), PreconditionError);
    }

    TEST_CASE("property: log_act product rule on homogeneous pieces") {
        // x^n log x = d/de x^e at e = n; the oracle differentiates the composite
        // action polynomial f_A(t + d_B) f_B(t) symbolically.
        oracle::Rng rng(53);
        for (int i = 0; i < 60; ++i) {
            const int da = static_cast<int>(oracle::uniform(rng, -3, 3)), db = static_cast<int>(oracle::uniform(rng, -3, 3));
            const ActionPoly fa = oracle::random_poly(rng, 3, 0, 5), fb = oracle::random_poly(rng, 3, 0, 5);
            const WeylOp a = WeylOp::piece(da, fa), b = WeylOp::piece(db, fb);
            const WeylOp ab = a * b;
            if (ab.is_zero()) continue;
            for (long n = -8; n <= 8; ++n) {
                const LogValue vb = log_act(b, n);
                const LogValue va = log_act(a, n + db);
                const LogValue expected{va.plain * vb.logpart + va.logpart * vb.plain, va.logpart * vb.logpart};
                CHECK(log_act(ab, n) == expected);
            }
        }
    }

    TEST_CASE("equivalence_report examples") {
        const EquivalenceReport r = equivalence_report({0}, 6, 0);
        CHECK_FALSE(r.rows.empty());
        for (const auto& row : r.rows) {
            CHECK(row.kind == "basis");
            CHECK(row.in_dp);
            CHECK(row.in_hc);
        }
        const Operator half = q(1, 2) * op("x*D*e-", DunklMode::numeric(2)) + Operator::x(DunklMode::numeric(2));
        CHECK_FALSE(in_dp(half));
        CHECK_FALSE(in_Hc(half));
        const EquivalenceReport e = equivalence_report({q(1, 2)}, 4, 5);
        CHECK_FALSE(e.rows.empty());
        CHECK(e.ok());
    }

    TEST_CASE("property: non-members are rejected by both tests at integer c") {
        for (long cv : {-3, -1, 0, 1, 2})
            for (unsigned long seed = 0; seed < 50; ++seed) {
                const NonMember nm = make_non_member(DunklMode::numeric(cv), seed);
                CAPTURE(nm.label);
                CHECK_FALSE(in_dp(nm.op));
                CHECK_FALSE(in_Hc(nm.op));
            }
    }
}
