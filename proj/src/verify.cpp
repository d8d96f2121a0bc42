#include "cherednik/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "cherednik/abstract.hpp"
#include "cherednik/basis.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/parser.hpp"
#include "cherednik/sl2.hpp"
#include "cherednik/weyl.hpp"

namespace cherednik {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

CoefPoly random_coef(Rng& rng, int max_c_degree, long bound, bool rational) {
    std::vector<Rational> coeffs;
    const int deg = static_cast<int>(uniform(rng, 0, max_c_degree));
    for (int i = 0; i <= deg; ++i) {
        const long num = uniform(rng, -bound, bound);
        coeffs.push_back(rational ? make_rational(num, uniform(rng, 1, 6)) : Rational(num));
    }
    return CoefPoly(std::move(coeffs));
}

ActionPoly random_action(Rng& rng, int max_t_degree, int max_c_degree, long bound, bool rational) {
    std::vector<CoefPoly> coeffs;
    const int deg = static_cast<int>(uniform(rng, 0, max_t_degree));
    for (int i = 0; i <= deg; ++i) coeffs.push_back(random_coef(rng, max_c_degree, bound, rational));
    return ActionPoly(std::move(coeffs));
}

// Products of generators and small integers: always integral on R[x].
Word random_product_word(Rng& rng, int length) {
    auto atom = [&]() {
        switch (uniform(rng, 0, 6)) {
            case 0: return Word::generator(Generator::X);
            case 1: return Word::generator(Generator::Dunkl);
            case 2: return Word::generator(Generator::EPlus);
            case 3: return Word::generator(Generator::EMinus);
            case 4: return Word::generator(Generator::Reflection);
            case 5: return Word::param();
            default: return Word::number(Rational(uniform(rng, 1, 4)));
        }
    };
    Word w = atom();
    for (int i = 1; i < length; ++i) w = Word::mul(std::move(w), atom());
    return w;
}

Word random_ast(Rng& rng, int depth) {
    const long pick = depth <= 0 ? uniform(rng, 0, 7) : uniform(rng, 0, 13);
    switch (pick) {
        case 0: return Word::generator(Generator::X);
        case 1: return Word::generator(Generator::Dunkl);
        case 2: return Word::generator(Generator::EPlus);
        case 3: return Word::generator(Generator::EMinus);
        case 4: return Word::generator(Generator::Reflection);
        case 5: return Word::param();
        case 6: return Word::number(Rational(uniform(rng, 0, 40)));
        case 7: return Word::number(make_rational(uniform(rng, 0, 9), uniform(rng, 1, 9)));
        case 8: return Word::add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 9: return Word::sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 10:
        case 11: return Word::mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 12: return Word::neg(random_ast(rng, depth - 1));
        default: return Word::pow(random_ast(rng, depth - 1), uniform(rng, -3, 5));
    }
}

// Independent evaluation: sum of coefficient * n^i.
CoefPoly horner_free_eval(const ActionPoly& f, long n) {
    CoefPoly acc;
    Rational power = 1;
    for (const auto& c : f.coeffs()) {
        acc += c * power;
        power *= n;
    }
    return acc;
}

Integer brute_force_divisor(const ActionPoly& f) {
    Integer g = 0;
    for (long n = 0; n <= f.degree() + 2; ++n) g = gcd(g, horner_free_eval(f, n).content());
    return g;
}

bool laurent_integral(const LaurentPoly& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second.is_integral(); });
}

CheckResult ok(std::string name) { return {std::move(name), true, ""}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Rational factor = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

// ---- poly_core ----

CheckResult check_newton_roundtrip() {
    const std::string name = "poly.newton_roundtrip";
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        const ActionPoly f = random_action(rng, 12, 2, 20, true);
        const auto alpha = to_newton(f);
        if (from_newton(alpha) != f) return fail(name, "round trip failed for " + f.to_string());
    }
    return ok(name);
}

CheckResult check_newton_evaluation() {
    const std::string name = "poly.newton_evaluation";
    Rng rng(102);
    for (int i = 0; i < 100; ++i) {
        const ActionPoly f = random_action(rng, 10, 2, 20, true);
        const ActionPoly g = from_newton(to_newton(f));
        for (long n = 0; n <= f.degree() + 3; ++n)
            if (g.eval(n) != horner_free_eval(f, n)) return fail(name, "value mismatch at " + std::to_string(n));
    }
    return ok(name);
}

CheckResult check_pascal_inverse() {
    const std::string name = "poly.pascal_inverse";
    const std::size_t n = 17;
    RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), i, j);
            aug[i][j] = Rational(b);
        }
        aug[i][n + i] = 1;
    }
    // Forward substitution on a unit lower-triangular matrix.
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t i = col + 1; i < n; ++i) {
            const Rational f = aug[i][col] / aug[col][col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j < 2 * n; ++j)
            if (!is_integer(aug[i][j])) return fail(name, "non-integral inverse entry");
    return ok(name);
}

CheckResult check_content_multiplicative() {
    const std::string name = "poly.content_multiplicative";
    Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const ActionPoly f = random_action(rng, 6, 2, 30, false);
        const long m = uniform(rng, -12, 12);
        const Integer lhs = integer_content(f * CoefPoly(m));
        const Integer rhs = abs(Integer(m)) * integer_content(f);
        if (lhs != rhs) return fail(name, "content(" + std::to_string(m) + " * f) mismatch for " + f.to_string());
    }
    return ok(name);
}

// ---- intval ----

CheckResult check_divisor_oracle() {
    const std::string name = "intval.divisor_oracle";
    Rng rng(201);
    for (int i = 0; i < 200; ++i) {
        ActionPoly f;
        if (i % 2 == 0) {
            f = random_action(rng, 8, 2, 50, false);
        } else {
            // Integer-valued with fractional t-coefficients.
            std::vector<CoefPoly> alpha;
            const int deg = static_cast<int>(uniform(rng, 0, 8));
            for (int k = 0; k <= deg; ++k) alpha.push_back(random_coef(rng, 2, 50, false) * Rational(uniform(rng, 1, 3)));
            f = from_newton(alpha);
        }
        const Integer got = divisor_of_values(f, DunklMode::symbolic());
        if (got != brute_force_divisor(f)) return fail(name, "symbolic divisor mismatch for " + f.to_string());
        const ActionPoly g = f.specialize_c(Rational(uniform(rng, -3, 3)));
        if (divisor_of_values(g, DunklMode::numeric(0)) != brute_force_divisor(g))
            return fail(name, "numeric divisor mismatch for " + g.to_string());
    }
    return ok(name);
}

CheckResult check_dunkl_factorization() {
    const std::string name = "intval.dunkl_factorization";
    for (unsigned k = 0; k <= 10; ++k) {
        for (Parity p : {Parity::Plus, Parity::Minus}) {
            const unsigned m = p == Parity::Plus ? m_delta(1, k) : m_delta(0, k);
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m);
            const ActionPoly rhs = l_poly(p, k) * binomial_poly(m) * CoefPoly(Rational(two_pow * factorial(m)));
            if (dunkl_poly(p, k) != rhs)
                return fail(name, std::string("factorization fails for ") + parity_char(p) + std::to_string(k));
        }
    }
    return ok(name);
}

std::vector<DunklMode> lattice_modes() {
    return {DunklMode::symbolic(), DunklMode::numeric(0), DunklMode::numeric(1), DunklMode::numeric(-2)};
}

bool r_valued_by_evaluation(const ActionPoly& f, const DunklMode& mode, long upto) {
    for (long n = 0; n <= upto; ++n)
        if (!mode.apply(horner_free_eval(f, n)).is_integral()) return false;
    return true;
}

CheckResult check_int_basis_valued() {
    const std::string name = "intval.int_basis_valued";
    for (const auto& mode : lattice_modes())
        for (Parity p : {Parity::Plus, Parity::Minus})
            for (int n = -4; n <= 3; ++n) {
                const int M = std::max(0, -n) + 4;
                const IntLattice lat = int_basis(p, n, mode, M);
                for (const auto& g : lat.generators) {
                    if (!r_valued_by_evaluation(g, mode, M + 2))
                        return fail(name, "generator " + g.to_string() + " is not R-valued");
                    if (n < 0 && !g.divmod(dunkl_poly(p, static_cast<unsigned>(-n), mode)).second.is_zero())
                        return fail(name, "generator " + g.to_string() + " is not a multiple of D");
                }
            }
    return ok(name);
}

CheckResult check_int_basis_maximal() {
    const std::string name = "intval.int_basis_maximal";
    for (const auto& mode : lattice_modes())
        for (Parity p : {Parity::Plus, Parity::Minus})
            for (int n = -4; n <= 3; ++n) {
                const int M = std::max(0, -n) + 4;
                for (const auto& g : int_basis(p, n, mode, M).generators)
                    for (long q : {2, 3, 5, 7, 11, 13})
                        if (r_valued_by_evaluation(g / Rational(q), mode, M + 2))
                            return fail(name, g.to_string() + " / " + std::to_string(q) + " is still R-valued");
            }
    return ok(name);
}

CheckResult check_int_basis_triangular() {
    const std::string name = "intval.int_basis_triangular";
    for (const auto& mode : lattice_modes())
        for (Parity p : {Parity::Plus, Parity::Minus})
            for (int n = -4; n <= 3; ++n) {
                const int M = std::max(0, -n) + 4;
                const IntLattice lat = int_basis(p, n, mode, M);
                const int start = std::max(0, -n);
                if (static_cast<int>(lat.generators.size()) != M - start + 1)
                    return fail(name, "wrong generator count at n = " + std::to_string(n));
                for (std::size_t i = 0; i < lat.generators.size(); ++i)
                    if (lat.generators[i].degree() != start + static_cast<int>(i))
                        return fail(name, "degrees not consecutive at n = " + std::to_string(n));
            }
    return ok(name);
}

// ---- opalgebra ----

CheckResult check_relations() {
    const std::string name = "op.relations";
    for (const auto& mode : {DunklMode::symbolic(), DunklMode::numeric(3)}) {
        const Operator x = Operator::x(mode), d = Operator::dunkl(mode), s = Operator::reflection(mode);
        const Operator ep = Operator::e_plus(mode), em = Operator::e_minus(mode), one = Operator::identity(mode);
        const Operator rhs = one - s * mode.parameter() * Rational(2);
        const std::vector<std::pair<std::string, bool>> identities = {
            {"s^2 = 1", s * s == one},
            {"e+^2 = e+", ep * ep == ep},
            {"e-^2 = e-", em * em == em},
            {"e+ e- = 0", (ep * em).is_zero()},
            {"e+ + e- = 1", ep + em == one},
            {"s x s = -x", s * x * s == -x},
            {"[D, x] = 1 - 2cs", commutator(d, x) == rhs},
            {"D e+ = e- D", d * ep == em * d},
            {"D e- = e+ D", d * em == ep * d},
        };
        for (const auto& [label, holds] : identities)
            if (!holds) return fail(name, label + " fails in mode " + mode.to_string());
        for (long k = -32; k <= 32; ++k)
            if (act(commutator(d, x), k) != act(rhs, k)) return fail(name, "[D, x] action differs at " + std::to_string(k));
    }
    return ok(name);
}

CheckResult check_compose_soundness() {
    const std::string name = "op.compose_soundness";
    Rng rng(301);
    const DunklMode mode = DunklMode::symbolic();
    for (int i = 0; i < 100; ++i) {
        const Operator a = from_word(random_product_word(rng, static_cast<int>(uniform(rng, 1, 6))), mode);
        const Operator b = from_word(random_product_word(rng, static_cast<int>(uniform(rng, 1, 6))), mode);
        const Operator ab = compose(a, b);
        for (long k = -16; k <= 16; ++k)
            if (act(ab, k) != act(a, act(b, k))) return fail(name, "composition disagrees at exponent " + std::to_string(k));
    }
    return ok(name);
}

CheckResult check_grading() {
    const std::string name = "op.grading";
    Rng rng(302);
    for (int i = 0; i < 100; ++i) {
        const Word w = random_product_word(rng, static_cast<int>(uniform(rng, 1, 7)));
        const auto deg = word_degree(w);
        for (const auto& [n, p] : grade_decompose(from_word(w, DunklMode::symbolic())))
            if (!deg || n != *deg) return fail(name, "piece outside the word degree for " + print(w));
    }
    return ok(name);
}

CheckResult check_divisor_linearity() {
    const std::string name = "op.divisor_linearity";
    Rng rng(303);
    const DunklMode mode = DunklMode::symbolic();
    for (int i = 0; i < 60; ++i) {
        const Operator q = from_word(random_product_word(rng, static_cast<int>(uniform(rng, 1, 6))), mode) +
                           from_word(random_product_word(rng, static_cast<int>(uniform(rng, 1, 6))), mode);
        if (q.is_zero()) continue;
        const Integer d = operator_divisor(q);
        long m = 0;
        while (m == 0) m = uniform(rng, -9, 9);
        if (operator_divisor(q * CoefPoly(m)) != abs(Integer(m)) * d)
            return fail(name, "divisor not linear for " + q.to_string());
        Integer brute = 0;
        const long upto = 2L * q.max_t_degree() + q.max_abs_degree() + 4;
        for (long k = 0; k <= upto; ++k)
            for (const auto& [e, v] : act(q, k)) brute = gcd(brute, v.content());
        if (brute != d) return fail(name, "divisor " + d.get_str() + " vs brute force " + brute.get_str());
    }
    return ok(name);
}

CheckResult check_delta_integrality() {
    const std::string name = "op.delta_integrality";
    for (Parity p : {Parity::Plus, Parity::Minus})
        for (const auto& label : basis_labels(p, 12)) {
            const Operator b = basis_element(label);
            if (!in_dp(b)) return fail(name, label.to_string() + " is not certified");
            for (long k = 0; k <= 40; ++k)
                if (!laurent_integral(act(b, k)))
                    return fail(name, label.to_string() + " is non-integral on x^" + std::to_string(k));
        }
    return ok(name);
}

CheckResult check_delta_maximality() {
    const std::string name = "op.delta_maximality";
    for (Parity p : {Parity::Plus, Parity::Minus})
        for (unsigned k1 = 0; k1 <= 10; ++k1)
            for (unsigned k2 = 0; k1 + 2 * k2 <= 10; ++k2)
                if (operator_divisor(delta_numerator(p, k1, k2)) != delta_denominator(p, k1, k2))
                    return fail(name, BasisLabel::delta(p, k1, k2).to_string() + " divisor differs from denominator");
    return ok(name);
}

std::map<BasisLabel, CoefPoly> random_combination(Rng& rng, const std::vector<BasisLabel>& labels, int terms,
                                                  int max_c_degree) {
    std::map<BasisLabel, CoefPoly> coeffs;
    for (int i = 0; i < terms; ++i) {
        const BasisLabel& l = labels[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(labels.size()) - 1))];
        CoefPoly a;
        while (a.is_zero()) a = random_coef(rng, max_c_degree, 5, false);
        coeffs[l] = a;
    }
    return coeffs;
}

CheckResult check_basis_roundtrip() {
    const std::string name = "op.basis_roundtrip";
    Rng rng(304);
    auto labels = basis_labels(Parity::Plus, 8);
    for (const auto& l : basis_labels(Parity::Minus, 8)) labels.push_back(l);
    for (int i = 0; i < 100; ++i) {
        const auto coeffs = random_combination(rng, labels, static_cast<int>(uniform(rng, 1, 6)), 3);
        if (decompose_in_basis(combine_basis(coeffs)) != coeffs) return fail(name, "decomposition differs");
    }
    return ok(name);
}

CheckResult check_hilbert() {
    const std::string name = "op.hilbert";
    for (unsigned m = 0; m <= 12; ++m)
        if (graded_dimension(m) != 2 * (m + 1)) return fail(name, "dimension at degree " + std::to_string(m));
    return ok(name);
}

CheckResult check_pbw_independence() {
    const std::string name = "op.pbw_independence";
    const DunklMode mode = DunklMode::numeric(make_rational(7, 3));
    std::vector<std::map<std::tuple<int, int, int>, Rational>> rows;
    for (Parity p : {Parity::Plus, Parity::Minus})
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; a + b <= 8; ++b) {
                const Operator op = compose(compose(Operator::x_power(mode, a), power(Operator::dunkl(mode), b)),
                                            Operator::e(p, mode));
                std::map<std::tuple<int, int, int>, Rational> row;
                for (const auto& [n, piece] : op.pieces())
                    for (Parity par : {Parity::Plus, Parity::Minus}) {
                        const auto alpha = to_newton(piece.action(par));
                        for (std::size_t i = 0; i < alpha.size(); ++i)
                            row[{n, par == Parity::Plus ? 0 : 1, static_cast<int>(i)}] = alpha[i].constant_term();
                    }
                rows.push_back(std::move(row));
            }
    std::map<std::tuple<int, int, int>, std::size_t> column;
    for (const auto& r : rows)
        for (const auto& [key, v] : r) column.try_emplace(key, column.size());
    RationalMatrix m(rows.size(), std::vector<Rational>(column.size(), Rational(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [key, v] : rows[i]) m[i][column[key]] = v;
    const std::size_t r = rank(m);
    if (r != rows.size())
        return fail(name, "rank " + std::to_string(r) + " of " + std::to_string(rows.size()) + " monomials");
    return ok(name);
}

CheckResult check_delta_zero_consistency() {
    const std::string name = "op.delta_zero_consistency";
    const DunklMode mode = DunklMode::symbolic();
    const Operator xd = compose(Operator::x(mode), Operator::dunkl(mode));
    for (Parity p : {Parity::Plus, Parity::Minus}) {
        const Operator l = p == Parity::Plus
                               ? xd
                               : xd + Operator::scalar(mode, mode.parameter() * Rational(2) - CoefPoly(1));
        for (unsigned k = 0; k <= 6; ++k) {
            Operator prod = Operator::identity(mode);
            for (unsigned i = 0; i < k; ++i) prod = compose(prod, l - Operator::scalar(mode, CoefPoly(Rational(2 * i))));
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k);
            const Operator expected =
                compose(prod, Operator::e(p, mode)) * CoefPoly(make_rational(1, two_pow * factorial(k)));
            if (expected != delta_basis(p, 0, k))
                return fail(name, BasisLabel::delta(p, 0, k).to_string() + " differs from the product formula");
        }
    }
    return ok(name);
}

// ---- weyl ----

CheckResult check_hasse_pascal() {
    const std::string name = "weyl.hasse_pascal";
    for (unsigned k = 0; k <= 10; ++k) {
        const WeylOp h = hasse(k);
        for (unsigned t = 0; t <= 2 * k; ++t) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), t, k);
            const LaurentPoly image = act(h, t);
            const CoefPoly got = image.count(static_cast<long>(t) - k) ? image.at(static_cast<long>(t) - k) : CoefPoly{};
            if (got != CoefPoly(Rational(b))) return fail(name, "hasse(" + std::to_string(k) + ") on x^" + std::to_string(t));
        }
    }
    return ok(name);
}

CheckResult check_hasse_composition() {
    const std::string name = "weyl.hasse_composition";
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= 5; ++b) {
            Integer bin;
            mpz_bin_uiui(bin.get_mpz_t(), a + b, a);
            if (hasse(a) * hasse(b) != Rational(bin) * hasse(a + b))
                return fail(name, "hasse(" + std::to_string(a) + ") hasse(" + std::to_string(b) + ")");
        }
    return ok(name);
}

CheckResult check_weyl_relation() {
    const std::string name = "weyl.relation";
    if (weyl_commutator(weyl_d(), weyl_x()) != WeylOp::identity()) return fail(name, "[d, x] != 1");
    return ok(name);
}

CheckResult check_weyl_closure() {
    const std::string name = "weyl.basis_closure";
    const auto basis = weyl_dp_basis(4);
    for (const auto& [la, a] : basis)
        for (const auto& [lb, b] : basis)
            if (!weyl_decompose(a * b))
                return fail(name, la.to_string() + " * " + lb.to_string() + " leaves the integral span");
    return ok(name);
}

CheckResult check_weyl_divisor_factorial() {
    const std::string name = "weyl.divisor_factorial";
    for (unsigned k = 0; k <= 8; ++k) {
        const Integer d = weyl_divisor(weyl_power(weyl_d(), k));
        Integer oracle = 0;
        for (long t = 0; t <= static_cast<long>(k) + 1; ++t) {
            Integer p = 1;
            for (unsigned i = 0; i < k; ++i) p *= t - static_cast<long>(i);
            oracle = gcd(oracle, p);
        }
        if (d != factorial(k) || d != oracle) return fail(name, "divisor of d^" + std::to_string(k));
    }
    return ok(name);
}

CheckResult check_tensor_divisibility() {
    const std::string name = "weyl.tensor_divisibility";
    std::vector<std::pair<std::string, Operator>> left;
    for (Parity p : {Parity::Plus, Parity::Minus})
        for (auto& [l, op] : basis_enumerate(p, 4)) left.emplace_back(l.to_string(), op);
    const auto right = weyl_dp_basis(4);
    for (const auto& [la, a] : left)
        for (const auto& [lb, b] : right)
            for (auto [ma, mb] : {std::pair<long, long>{1, 1}, {2, 3}, {4, 1}}) {
                const Operator sa = a * CoefPoly(ma);
                const WeylOp sb = Rational(mb) * b;
                for (long d : {1L, ma * mb, 2L, 3L}) {
                    const auto r = tensor_divisor_report(sa, sb, Integer(d));
                    if (!r.holds)
                        return fail(name, "implication fails for " + la + " (x) " + lb.to_string() + " with d = " +
                                              std::to_string(d));
                }
            }
    return ok(name);
}

// ---- abstract ----

CheckResult check_hc_equivalence() {
    const std::string name = "abstract.hc_equivalence";
    const auto report = equivalence_report({-3, -1, 0, 1, 2}, 8, 50);
    for (const auto& row : report.rows) {
        const bool expected = row.kind == "basis";
        if (row.in_dp != expected || row.in_hc != expected)
            return fail(name, "c = " + to_string(row.c) + ", " + row.operator_label);
    }
    return ok(name);
}

CheckResult check_four_components() {
    const std::string name = "abstract.four_components";
    Rng rng(401);
    const DunklMode mode = DunklMode::symbolic();
    for (int i = 0; i < 40; ++i) {
        const Operator q = from_word(random_product_word(rng, static_cast<int>(uniform(rng, 1, 5))), mode) +
                           from_word(random_product_word(rng, static_cast<int>(uniform(rng, 1, 5))), mode);
        const FourComponents split = four_component_split(q);
        if (split.sum() != q) return fail(name, "components do not sum to " + q.to_string());
        for (const Operator* part : {&split.b, &split.b_bar, &split.a, &split.a_bar}) {
            const FourComponents again = four_component_split(*part);
            if (again.sum() != *part) return fail(name, "re-split changes a component");
            const int nonzero = !again.b.is_zero() + !again.b_bar.is_zero() + !again.a.is_zero() + !again.a_bar.is_zero();
            if (nonzero > 1) return fail(name, "re-split of a component is not concentrated");
        }
    }
    return ok(name);
}

CheckResult check_log_product_rule() {
    const std::string name = "abstract.log_product_rule";
    Rng rng(402);
    for (int i = 0; i < 60; ++i) {
        const int da = static_cast<int>(uniform(rng, -3, 3)), db = static_cast<int>(uniform(rng, -3, 3));
        const ActionPoly f = random_action(rng, 3, 0, 9, false), g = random_action(rng, 3, 0, 9, false);
        const WeylOp a = WeylOp::piece(da, f), b = WeylOp::piece(db, g);
        const WeylOp ab = a * b;
        for (long n = -8; n <= 8; ++n) {
            // A(B(x^n log x)) = A(g'(n) x^{n+db} + g(n) x^{n+db} log x)
            const CoefPoly fv = f.eval(n + db), gv = g.eval(n);
            const LogValue expected{g.derivative().eval(n) * fv + gv * f.derivative().eval(n + db), fv * gv};
            const LogValue got = ab.is_zero() ? LogValue{} : log_act(ab, n);
            if (got != expected) return fail(name, "product rule fails at n = " + std::to_string(n));
        }
    }
    return ok(name);
}

CheckResult check_shifted_specialization() {
    const std::string name = "abstract.shifted_specialization";
    Rng rng(403);
    // For c in 1/2 + Z with 1 + 2c even, mu_j = x^{j-1} |x|^{1+2c} is the monomial x^{j+2c}.
    for (int i = 0; i < 20; ++i) {
        const Word w = random_product_word(rng, static_cast<int>(uniform(rng, 1, 5)));
        const Operator sym = from_word(w, DunklMode::symbolic());
        for (const Rational& c : {make_rational(1, 2), make_rational(3, 2), make_rational(5, 2)}) {
            const Operator num = from_word(w, DunklMode::numeric(c));
            const long shift = Rational(2 * c).get_num().get_si();
            for (long j = 0; j <= 8; ++j) {
                LaurentPoly expected;
                for (const auto& [e, v] : act(num, j + shift)) expected[e - shift] = v;
                LaurentPoly got;
                for (const auto& [idx, v] : shifted_image(sym, j)) {
                    CoefPoly val(v.eval(c));
                    if (!val.is_zero()) got[idx] = val;
                }
                if (got != expected) return fail(name, "mismatch for " + print(w) + " at mu_" + std::to_string(j));
            }
        }
    }
    return ok(name);
}

CheckResult check_order_filter() {
    const std::string name = "abstract.order_filter";
    for (const auto& [l, op] : weyl_dp_basis(6))
        if (!bracket_lowers_order(op)) return fail(name, "[Q, x] does not lower the order of " + l.to_string());
    Rng rng(404);
    for (int i = 0; i < 50; ++i) {
        WeylOp q;
        for (int p = 0; p < 3; ++p) q += WeylOp::piece(static_cast<int>(uniform(rng, -3, 3)), random_action(rng, 4, 0, 9, false));
        if (!bracket_lowers_order(q)) return fail(name, "[Q, x] does not lower the order of " + q.to_string());
    }
    return ok(name);
}

// ---- sl2 ----

CheckResult check_sl2_brackets() {
    const std::string name = "sl2.brackets";
    for (const auto& mode : {DunklMode::symbolic(), DunklMode::numeric(2)}) {
        const Sl2Triple t = build_triple(mode);
        if (commutator(t.h, t.e) != t.e * CoefPoly(2)) return fail(name, "[H, E] != 2E");
        if (commutator(t.h, t.f) != t.f * CoefPoly(-2)) return fail(name, "[H, F] != -2F");
        if (commutator(t.e, t.f) != t.h) return fail(name, "[E, F] != H");
    }
    return ok(name);
}

CheckResult check_casimir() {
    const std::string name = "sl2.casimir";
    const DunklMode mode = DunklMode::symbolic();
    const Operator residual = casimir(mode) - Operator::e_plus(mode) * casimir_scalar(mode);
    if (!residual.is_zero()) return fail(name, "residual " + residual.to_string());
    return ok(name);
}

CheckResult check_sigma() {
    const std::string name = "sl2.sigma";
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; a + b <= 5; ++b)
            for (unsigned k = 0; a + b + k <= 5; ++k) {
                if (a > 0 && b > 0) continue;
                if (sigma(a, b, k) != basis_element(sigma_label(a, b, k)))
                    return fail(name, "Sigma(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")");
            }
    return ok(name);
}

CheckResult check_spherical_decomposition() {
    const std::string name = "sl2.spherical_decomposition";
    Rng rng(501);
    std::vector<BasisLabel> labels;
    for (const auto& [l, op] : spherical_basis(8)) labels.push_back(l);
    for (int i = 0; i < 40; ++i) {
        const auto coeffs = random_combination(rng, labels, static_cast<int>(uniform(rng, 1, 4)), 2);
        const Operator q = combine_basis(coeffs);
        if (sandwich(Parity::Plus, q, Parity::Plus) != q) return fail(name, "not sandwich-stable");
        for (const auto& [l, a] : decompose_in_basis(q))
            if (l.sign != Parity::Plus || l.k1 % 2 != 0 || l.x_power % 2 != 0)
                return fail(name, "non-spherical label " + l.to_string());
    }
    return ok(name);
}

// ---- cli ----

CheckResult check_parser_roundtrip() {
    const std::string name = "cli.parser_roundtrip";
    Rng rng(601);
    for (int i = 0; i < 200; ++i) {
        const Word w = random_ast(rng, static_cast<int>(uniform(rng, 0, 6)));
        const std::string text = print(w);
        const Word back = parse(text);
        if (!(back == w) || print(back) != text) return fail(name, "round trip failed for " + text);
    }
    return ok(name);
}

}  // namespace

std::vector<Check> invariant_checks() {
    return {
        {"poly.newton_roundtrip", check_newton_roundtrip},
        {"poly.newton_evaluation", check_newton_evaluation},
        {"poly.pascal_inverse", check_pascal_inverse},
        {"poly.content_multiplicative", check_content_multiplicative},
        {"intval.divisor_oracle", check_divisor_oracle},
        {"intval.dunkl_factorization", check_dunkl_factorization},
        {"intval.int_basis_valued", check_int_basis_valued},
        {"intval.int_basis_maximal", check_int_basis_maximal},
        {"intval.int_basis_triangular", check_int_basis_triangular},
        {"op.relations", check_relations},
        {"op.compose_soundness", check_compose_soundness},
        {"op.grading", check_grading},
        {"op.divisor_linearity", check_divisor_linearity},
        {"op.delta_integrality", check_delta_integrality},
        {"op.delta_maximality", check_delta_maximality},
        {"op.basis_roundtrip", check_basis_roundtrip},
        {"op.hilbert", check_hilbert},
        {"op.pbw_independence", check_pbw_independence},
        {"op.delta_zero_consistency", check_delta_zero_consistency},
        {"weyl.hasse_pascal", check_hasse_pascal},
        {"weyl.hasse_composition", check_hasse_composition},
        {"weyl.relation", check_weyl_relation},
        {"weyl.basis_closure", check_weyl_closure},
        {"weyl.divisor_factorial", check_weyl_divisor_factorial},
        {"weyl.tensor_divisibility", check_tensor_divisibility},
        {"abstract.hc_equivalence", check_hc_equivalence},
        {"abstract.four_components", check_four_components},
        {"abstract.log_product_rule", check_log_product_rule},
        {"abstract.shifted_specialization", check_shifted_specialization},
        {"abstract.order_filter", check_order_filter},
        {"sl2.brackets", check_sl2_brackets},
        {"sl2.casimir", check_casimir},
        {"sl2.sigma", check_sigma},
        {"sl2.spherical_decomposition", check_spherical_decomposition},
        {"cli.parser_roundtrip", check_parser_roundtrip},
    };
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned threads,
                                    const std::set<std::string>& negate) {
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            CheckResult r;
            try {
                r = checks[i].run();
            } catch (const std::exception& e) {
                r = {checks[i].name, false, std::string("exception: ") + e.what()};
            }
            if (negate.count(r.name)) {
                r.passed = !r.passed;
                r.detail = "outcome negated on request";
            }
            results[i] = std::move(r);
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace cherednik
