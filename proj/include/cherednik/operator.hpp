#pragma once

// Normal form for elements of the type A1 Cherednik algebra (t = 1) acting on
// the Laurent module Q(c)[x, 1/x].
//
// A graded piece of degree n is a pair of action polynomials (f+, f-):
//     x^{2t}   |->  f+(t) x^{2t+n}
//     x^{2t+1} |->  f-(t) x^{2t+1+n}
// An Operator is a finite sum of pieces with distinct degrees. Two operators
// are equal iff their pieces are, which is the same as acting identically on
// every Laurent monomial.

#include <map>
#include <optional>
#include <string>

#include "cherednik/intval.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

struct GradedOp {
    int degree = 0;
    ActionPoly f_plus;
    ActionPoly f_minus;

    const ActionPoly& action(Parity p) const { return p == Parity::Plus ? f_plus : f_minus; }
    ActionPoly& action(Parity p) { return p == Parity::Plus ? f_plus : f_minus; }
    bool is_zero() const { return f_plus.is_zero() && f_minus.is_zero(); }

    friend bool operator==(const GradedOp&, const GradedOp&) = default;
};

// Image of a monomial: exponent -> coefficient, zero coefficients omitted.
using LaurentPoly = std::map<long, CoefPoly>;

class Operator {
public:
    explicit Operator(DunklMode mode = DunklMode::symbolic()) : mode_(std::move(mode)) {}

    static Operator piece(const DunklMode& mode, int degree, const ActionPoly& f_plus, const ActionPoly& f_minus);
    static Operator scalar(const DunklMode& mode, const CoefPoly& value);
    static Operator identity(const DunklMode& mode) { return scalar(mode, 1); }
    static Operator x_power(const DunklMode& mode, int n);
    static Operator x(const DunklMode& mode) { return x_power(mode, 1); }
    // D = d/dx - (2c/x) e-
    static Operator dunkl(const DunklMode& mode);
    static Operator e_plus(const DunklMode& mode);
    static Operator e_minus(const DunklMode& mode);
    static Operator e(Parity p, const DunklMode& mode) { return p == Parity::Plus ? e_plus(mode) : e_minus(mode); }
    static Operator reflection(const DunklMode& mode);

    const DunklMode& mode() const noexcept { return mode_; }
    const std::map<int, GradedOp>& pieces() const noexcept { return pieces_; }
    bool is_zero() const noexcept { return pieces_.empty(); }
    const GradedOp* find_piece(int degree) const;

    // Largest t-degree over all action polynomials (-1 for zero).
    int max_t_degree() const;
    // Largest |degree| over pieces (0 for zero).
    int max_abs_degree() const;

    void add_piece(const GradedOp& piece);

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(const CoefPoly& s);

    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(Operator a, const CoefPoly& s) { return a *= s; }
    friend Operator operator*(const CoefPoly& s, Operator a) { return a *= s; }
    friend Operator operator*(const Rational& s, Operator a) { return a *= CoefPoly(s); }
    Operator operator-() const;

    friend bool operator==(const Operator& a, const Operator& b) {
        return a.mode_ == b.mode_ && a.pieces_ == b.pieces_;
    }

    std::string to_string() const;

private:
    void check_mode(const Operator& o) const;
    DunklMode mode_;
    std::map<int, GradedOp> pieces_;
};

// a after b. Throws ModeMismatch.
Operator compose(const Operator& a, const Operator& b);
inline Operator operator*(const Operator& a, const Operator& b) { return compose(a, b); }
Operator power(const Operator& a, unsigned n);
Operator commutator(const Operator& a, const Operator& b);
// e_left * q * e_right
Operator sandwich(Parity left, const Operator& q, Parity right);

LaurentPoly act(const Operator& q, long k);
// Applies q to a Laurent polynomial.
LaurentPoly act(const Operator& q, const LaurentPoly& v);
std::string laurent_to_string(const LaurentPoly& v);

std::map<int, GradedOp> grade_decompose(const Operator& q);

struct PolynomialCheck {
    bool ok = true;
    long exponent = 0;   // first offending exponent when !ok
    std::string reason;  // empty when ok
};

// Decides whether q maps R[x] into itself, reporting the first failure.
PolynomialCheck check_preserves_polynomials(const Operator& q);
bool preserves_polynomials(const Operator& q);

// Largest n with q/n still mapping R[x] into R[x]; 0 for q = 0.
// Throws NotPolynomialPreserving.
Integer operator_divisor(const Operator& q);

struct DpWitness {
    Integer denominator;
    Operator numerator;  // lies in the undivided algebra H_{1,c}(R)
};

struct DpVerdict {
    std::optional<DpWitness> witness;
    std::string reason;  // why membership fails; empty on success
};

DpVerdict dp_verdict(const Operator& q);
std::optional<DpWitness> in_dp(const Operator& q);

}  // namespace cherednik
