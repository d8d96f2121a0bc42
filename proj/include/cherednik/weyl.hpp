#pragma once

// The integral Weyl algebra Z[x, d/dx] acting on Z[x, 1/x] and its divided
// power extension, spanned by x^k times the Hasse derivatives.
//
// A piece of degree n is a single action polynomial: x^t |-> f(t) x^{t+n}.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/operator.hpp"

namespace cherednik {

// The tensor proposition needs R^x intersected with Z to be {1, -1}. For Z and
// Z[c] the units are exactly +-1, so every positive integer divisor found
// below is determined up to sign.
inline constexpr bool kUnitsMeetIntegersInSigns = true;
static_assert(kUnitsMeetIntegersInSigns, "tensor divisibility needs R^x cap Z = {+-1}");

class WeylOp {
public:
    WeylOp() = default;

    static WeylOp piece(int degree, const ActionPoly& f);
    static WeylOp scalar(const Rational& value) { return piece(0, ActionPoly(value)); }
    static WeylOp identity() { return scalar(1); }
    static WeylOp x_power(int n) { return piece(n, ActionPoly(1)); }

    const std::map<int, ActionPoly>& pieces() const noexcept { return pieces_; }
    bool is_zero() const noexcept { return pieces_.empty(); }
    // Largest t-degree over all pieces (-1 for zero).
    int max_t_degree() const;

    void add_piece(int degree, const ActionPoly& f);

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    WeylOp& operator*=(const Rational& s);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator*(const Rational& s, WeylOp a) { return a *= s; }
    WeylOp operator-() const;
    friend bool operator==(const WeylOp&, const WeylOp&) = default;

    std::string to_string() const;

private:
    std::map<int, ActionPoly> pieces_;
};

// x^t |-> C(t, k) x^{t-k}
WeylOp hasse(unsigned k);
WeylOp weyl_x();
WeylOp weyl_d();

// a after b
WeylOp weyl_compose(const WeylOp& a, const WeylOp& b);
inline WeylOp operator*(const WeylOp& a, const WeylOp& b) { return weyl_compose(a, b); }
WeylOp weyl_power(const WeylOp& a, unsigned n);
WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b);

LaurentPoly act(const WeylOp& q, long k);

// Largest n with q/n integral on Z[x]; 0 for q = 0. Throws NotPolynomialPreserving.
Integer weyl_divisor(const WeylOp& q);

struct WeylLabel {
    unsigned x_power;
    unsigned hasse_order;
    std::string to_string() const;
    friend auto operator<=>(const WeylLabel&, const WeylLabel&) = default;
};

// x^k * hasse(l) for k + l <= N.
std::vector<std::pair<WeylLabel, WeylOp>> weyl_dp_basis(unsigned max_total_degree);

// Integer coordinates in the x^k hasse(l) basis; nullopt when q is not in the
// divided power extension.
std::optional<std::map<WeylLabel, Integer>> weyl_decompose(const WeylOp& q);

struct TensorDivisorReport {
    Integer left;      // divisor of a
    Integer right;     // divisor of b
    Integer product;   // gcd of the outer-product action table
    bool divides = false;  // d | product
    bool holds = false;    // divides implies d = d1 d2 with d1 | left, d2 | right
};

// Checks the tensor divisibility implication for a (x) b on x^k (x) q^m with
// 0 <= k, m <= table_size.
TensorDivisorReport tensor_divisor_report(const Operator& a, const WeylOp& b, const Integer& d, long table_size = 20);
bool tensor_divisor_check(const Operator& a, const WeylOp& b, const Integer& d);

// Grothendieck order: the largest t-degree of an action polynomial.
int grothendieck_order(const WeylOp& q);
// [q, x] has strictly smaller order than q (or vanishes when q has order 0).
bool bracket_lowers_order(const WeylOp& q);

}  // namespace cherednik
