#pragma once

// Integer-valued polynomial lattices attached to the graded pieces of the
// type A1 Cherednik algebra: the Dunkl action polynomials, their divisors
// of values, and bases of the lattices Int_R(H^{+-}[n]).

#include <optional>
#include <string>
#include <vector>

#include "cherednik/poly.hpp"

namespace cherednik {

enum class Parity { Plus, Minus };

char parity_char(Parity p);

// Base ring selector: Z[c] with c a formal parameter, or Z with c fixed to a
// number. Only integers are meaningful as elements of Z; half-integers are
// accepted for exploration runs (every polynomial of the engine depends on
// c only through 2c, so coefficients stay integral).
class DunklMode {
public:
    static DunklMode symbolic() { return DunklMode(); }
    static DunklMode numeric(Rational c) { return DunklMode(std::move(c)); }

    bool is_symbolic() const noexcept { return !value_.has_value(); }
    bool is_numeric() const noexcept { return value_.has_value(); }
    // Requires is_numeric().
    const Rational& c_value() const;

    // c as an element of the coefficient ring.
    CoefPoly parameter() const;
    // Substitutes the fixed value of c; identity in symbolic mode.
    ActionPoly apply(const ActionPoly& f) const;
    CoefPoly apply(const CoefPoly& f) const;

    std::string to_string() const;

    friend bool operator==(const DunklMode& a, const DunklMode& b) { return a.value_ == b.value_; }

private:
    DunklMode() = default;
    explicit DunklMode(Rational c) : value_(std::move(c)) {}
    std::optional<Rational> value_;
};

// floor((k + delta) / 2)
unsigned m_delta(unsigned delta, unsigned k);

// D^+_k(t) = prod_{i<k} (2t - i - 2c p_i),  D^-_k(t) = prod_{i<k} (2t + 1 - i - 2c p_{i+1})
// where p_i is 1 for odd i and 0 for even i.
ActionPoly dunkl_poly(Parity parity, unsigned k, const DunklMode& mode = DunklMode::symbolic());

// L^+_k(t) = prod_{i<m_0(k)} (2t - 2i - 1 - 2c),  L^-_k(t) = prod_{i<m_1(k)} (2t - 2i + 1 - 2c)
ActionPoly l_poly(Parity parity, unsigned k, const DunklMode& mode = DunklMode::symbolic());

// True iff f takes values in R at every integer t >= 0.
bool is_r_valued(const ActionPoly& f, const DunklMode& mode);

// Largest positive integer dividing f(n) in R for all n >= 0; 0 for f = 0.
// Throws NonIntegralValues if some value is not in R.
Integer divisor_of_values(const ActionPoly& f, const DunklMode& mode);

using IntMatrix = std::vector<std::vector<Integer>>;

// Row Hermite normal form: zero rows dropped, pivots positive and strictly
// moving right, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

// Integer basis (in Hermite normal form) of span_Q(rows) intersected with Z^m.
IntMatrix saturate(const IntMatrix& rows);

struct IntLattice {
    Parity parity;
    int degree;
    DunklMode mode;
    int truncation;
    // One generator per t-degree, ordered by increasing degree.
    std::vector<ActionPoly> generators;
};

// Basis of Int_R(H^{+-}[n]) truncated at t-degree max_t_degree.
// Symbolic mode uses the closed-form basis, numeric mode lattice saturation.
IntLattice int_basis(Parity parity, int n, const DunklMode& mode, int max_t_degree);

// Closed-form symbolic basis specialised at the given value of c.
IntLattice specialized_symbolic_basis(Parity parity, int n, const Rational& c, int max_t_degree);

// Coordinates of target in the span of generators whose t-degrees strictly
// increase and whose leading t-coefficients are constants. Solved by
// back-substitution on Newton coordinates; nullopt when target is outside
// the Q(c)-span.
std::optional<std::vector<CoefPoly>> triangular_coordinates(const std::vector<ActionPoly>& generators,
                                                            const ActionPoly& target);

// target lies in the R-span of the lattice generators.
bool lattice_contains(const IntLattice& lattice, const ActionPoly& target);

}  // namespace cherednik
