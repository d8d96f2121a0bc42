#pragma once

// Exact scalars and the two-level polynomial tower used everywhere:
//
//   CoefPoly   -- polynomial in the parameter c with rational coefficients
//   ActionPoly -- polynomial in t whose coefficients are CoefPolys
//
// Both keep a dense coefficient vector with trailing zeros stripped, so the
// zero polynomial is the empty vector and equality is structural.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cherednik {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
bool is_integer(const Rational& q);
std::string to_string(const Rational& q);
Integer factorial(unsigned long n);

class CoefPoly {
public:
    CoefPoly() = default;
    CoefPoly(long value);  // NOLINT(google-explicit-constructor)
    CoefPoly(const Rational& value);  // NOLINT(google-explicit-constructor)
    explicit CoefPoly(std::vector<Rational> coeffs);

    static CoefPoly parameter();  // the polynomial "c"

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(int i) const;
    Rational constant_term() const { return coeff(0); }

    Rational eval(const Rational& c) const;

    // True iff every coefficient is an integer, i.e. the value lies in Z[c].
    bool is_integral() const;
    // gcd of the integer coefficients; 0 for the zero polynomial.
    // Throws NonIntegralInput if a coefficient is not an integer.
    Integer content() const;
    // lcm of the coefficient denominators (1 for the zero polynomial).
    Integer denominator_lcm() const;

    CoefPoly& operator+=(const CoefPoly& o);
    CoefPoly& operator-=(const CoefPoly& o);
    CoefPoly& operator*=(const CoefPoly& o);
    CoefPoly& operator*=(const Rational& s);
    CoefPoly& operator/=(const Rational& s);

    friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
    friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
    friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator*(CoefPoly a, const Rational& s) { return a *= s; }
    friend CoefPoly operator*(const Rational& s, CoefPoly a) { return a *= s; }
    friend CoefPoly operator/(CoefPoly a, const Rational& s) { return a /= s; }
    CoefPoly operator-() const;

    friend bool operator==(const CoefPoly& a, const CoefPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

class ActionPoly {
public:
    ActionPoly() = default;
    ActionPoly(long value);  // NOLINT(google-explicit-constructor)
    ActionPoly(const Rational& value);  // NOLINT(google-explicit-constructor)
    ActionPoly(const CoefPoly& value);  // NOLINT(google-explicit-constructor)
    explicit ActionPoly(std::vector<CoefPoly> coeffs);

    static ActionPoly variable();  // the polynomial "t"
    // a*t + b
    static ActionPoly affine(const CoefPoly& a, const CoefPoly& b);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<CoefPoly>& coeffs() const noexcept { return coeffs_; }
    CoefPoly coeff(int i) const;
    CoefPoly leading() const { return coeffs_.empty() ? CoefPoly{} : coeffs_.back(); }

    CoefPoly eval(const Rational& t) const;
    CoefPoly eval(long t) const { return eval(Rational(t)); }
    CoefPoly eval(const CoefPoly& t) const;

    ActionPoly shifted(const Rational& a) const;  // f(t + a)
    ActionPoly derivative() const;
    ActionPoly specialize_c(const Rational& c) const;
    // Largest c-degree among the coefficients (-1 for zero).
    int c_degree() const;
    bool is_integral() const;

    // Division by a polynomial whose leading t-coefficient is a nonzero
    // rational constant; exact over Q[c]. Returns {quotient, remainder}.
    std::pair<ActionPoly, ActionPoly> divmod(const ActionPoly& divisor) const;

    ActionPoly& operator+=(const ActionPoly& o);
    ActionPoly& operator-=(const ActionPoly& o);
    ActionPoly& operator*=(const CoefPoly& s);
    ActionPoly& operator/=(const Rational& s);

    friend ActionPoly operator+(ActionPoly a, const ActionPoly& b) { return a += b; }
    friend ActionPoly operator-(ActionPoly a, const ActionPoly& b) { return a -= b; }
    friend ActionPoly operator*(const ActionPoly& a, const ActionPoly& b);
    friend ActionPoly operator*(ActionPoly a, const CoefPoly& s) { return a *= s; }
    friend ActionPoly operator*(const CoefPoly& s, ActionPoly a) { return a *= s; }
    friend ActionPoly operator/(ActionPoly a, const Rational& s) { return a /= s; }
    ActionPoly operator-() const;

    friend bool operator==(const ActionPoly& a, const ActionPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<CoefPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CoefPoly& p);
std::ostream& operator<<(std::ostream& os, const ActionPoly& p);

// C(t, k) = t(t-1)...(t-k+1)/k!
ActionPoly binomial_poly(unsigned k);

// Expanded product of affine factors; throws PreconditionError if a factor
// has t-degree above one.
ActionPoly falling_product(std::span<const ActionPoly> factors);

// Newton coordinates (alpha_0..alpha_N), f = sum alpha_k C(t, k), N = deg f.
// The zero polynomial maps to the empty list.
std::vector<CoefPoly> to_newton(const ActionPoly& f);
ActionPoly from_newton(std::span<const CoefPoly> coeffs);

// gcd of every integer coefficient of f; 0 for f = 0.
Integer integer_content(const ActionPoly& f);

}  // namespace cherednik
