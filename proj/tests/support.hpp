#pragma once

// Test-side oracles. Nothing here reuses the engine's Newton or normal-form
// code paths: values are computed by direct evaluation and by applying the
// generators one at a time to Laurent polynomials.

#include <random>
#include <string>
#include <vector>

#include "cherednik/operator.hpp"
#include "cherednik/word.hpp"

namespace oracle {

using cherednik::ActionPoly;
using cherednik::CoefPoly;
using cherednik::Integer;
using cherednik::LaurentPoly;
using cherednik::Rational;

inline CoefPoly c() { return CoefPoly::parameter(); }
inline Rational q(long n, long d = 1) { return cherednik::make_rational(n, d); }

// sum_i a_i n^i
inline CoefPoly eval(const ActionPoly& f, const Rational& n) {
    CoefPoly acc;
    Rational p = 1;
    for (const auto& a : f.coeffs()) {
        acc += a * p;
        p *= n;
    }
    return acc;
}

inline Integer content(const CoefPoly& v) {
    Integer g = 0;
    for (const auto& a : v.coeffs()) g = gcd(g, a.get_num());
    return g;
}

// gcd of contents of f(0), ..., f(deg + 2); c substituted first when given.
inline Integer value_gcd(const ActionPoly& f, const Rational* c_value = nullptr) {
    Integer g = 0;
    for (long n = 0; n <= f.degree() + 2; ++n) {
        CoefPoly v = eval(f, n);
        if (c_value) v = CoefPoly(v.eval(*c_value));
        g = gcd(g, content(v));
    }
    return g;
}

// C(n, k) for any integer n.
inline Rational binom(long n, unsigned k) {
    Rational acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= q(n - static_cast<long>(i), static_cast<long>(i) + 1);
    return acc;
}

inline void add_term(LaurentPoly& v, long e, const CoefPoly& a) {
    if (a.is_zero()) return;
    auto [it, inserted] = v.try_emplace(e, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) v.erase(it);
    }
}

// Generators applied one at a time, c symbolic or fixed.
struct Action {
    CoefPoly cval = CoefPoly::parameter();

    LaurentPoly x(const LaurentPoly& v) const {
        LaurentPoly out;
        for (const auto& [e, a] : v) add_term(out, e + 1, a);
        return out;
    }
    // D x^k = k x^{k-1} - 2c [k odd] x^{k-1}
    LaurentPoly d(const LaurentPoly& v) const {
        LaurentPoly out;
        for (const auto& [e, a] : v) {
            CoefPoly coef{Rational(e)};
            if (e % 2 != 0) coef -= cval * Rational(2);
            add_term(out, e - 1, a * coef);
        }
        return out;
    }
    LaurentPoly e_plus(const LaurentPoly& v) const {
        LaurentPoly out;
        for (const auto& [e, a] : v)
            if (e % 2 == 0) add_term(out, e, a);
        return out;
    }
    LaurentPoly e_minus(const LaurentPoly& v) const {
        LaurentPoly out;
        for (const auto& [e, a] : v)
            if (e % 2 != 0) add_term(out, e, a);
        return out;
    }
    LaurentPoly s(const LaurentPoly& v) const {
        LaurentPoly out;
        for (const auto& [e, a] : v) add_term(out, e, e % 2 == 0 ? a : -a);
        return out;
    }
    LaurentPoly scale(const LaurentPoly& v, const CoefPoly& s) const {
        LaurentPoly out;
        for (const auto& [e, a] : v) add_term(out, e, a * s);
        return out;
    }
    LaurentPoly plus(LaurentPoly a, const LaurentPoly& b) const {
        for (const auto& [e, v] : b) add_term(a, e, v);
        return a;
    }

    // Applies a word (products, sums, nonnegative powers) to v.
    LaurentPoly apply(const cherednik::Word& w, const LaurentPoly& v) const {
        using K = cherednik::Word::Kind;
        using G = cherednik::Generator;
        switch (w.kind) {
            case K::Gen:
                switch (w.gen) {
                    case G::X: return x(v);
                    case G::Dunkl: return d(v);
                    case G::EPlus: return e_plus(v);
                    case G::EMinus: return e_minus(v);
                    case G::Reflection: return s(v);
                }
                return {};
            case K::Literal: return scale(v, CoefPoly(w.literal));
            case K::Param: return scale(v, cval);
            case K::Add: return plus(apply(w.children[0], v), apply(w.children[1], v));
            case K::Sub: return plus(apply(w.children[0], v), scale(apply(w.children[1], v), CoefPoly(-1)));
            case K::Mul: return apply(w.children[0], apply(w.children[1], v));
            case K::Neg: return scale(apply(w.children[0], v), CoefPoly(-1));
            case K::Pow: {
                LaurentPoly acc = v;
                for (long i = 0; i < w.exponent; ++i) acc = apply(w.children[0], acc);
                return acc;
            }
        }
        return {};
    }

    LaurentPoly monomial(long k) const { return {{k, CoefPoly(1)}}; }
};

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline CoefPoly random_coef(Rng& rng, int max_c_degree, long bound) {
    std::vector<Rational> coeffs;
    const long deg = uniform(rng, 0, max_c_degree);
    for (long i = 0; i <= deg; ++i) coeffs.emplace_back(uniform(rng, -bound, bound));
    return CoefPoly(std::move(coeffs));
}

inline ActionPoly random_poly(Rng& rng, int max_t_degree, int max_c_degree, long bound) {
    std::vector<CoefPoly> coeffs;
    const long deg = uniform(rng, 0, max_t_degree);
    for (long i = 0; i <= deg; ++i) coeffs.push_back(random_coef(rng, max_c_degree, bound));
    return ActionPoly(std::move(coeffs));
}

// Product of generators, c and small positive integers.
inline cherednik::Word random_monomial_word(Rng& rng, int length) {
    using cherednik::Generator;
    using cherednik::Word;
    auto atom = [&]() {
        switch (uniform(rng, 0, 6)) {
            case 0: return Word::generator(Generator::X);
            case 1: return Word::generator(Generator::Dunkl);
            case 2: return Word::generator(Generator::EPlus);
            case 3: return Word::generator(Generator::EMinus);
            case 4: return Word::generator(Generator::Reflection);
            case 5: return Word::param();
            default: return Word::number(Rational(uniform(rng, 1, 3)));
        }
    };
    Word w = atom();
    for (int i = 1; i < length; ++i) w = Word::mul(std::move(w), atom());
    return w;
}

}  // namespace oracle
