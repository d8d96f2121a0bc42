#pragma once

// The explicit Z[c]-basis of the divided power extension:
//
//   Delta+_{k1,k2} = D^{k1} prod_{i<k2} (xD - 2(i+m)) / (2^{m+k2} (m+k2)!) e+,       m = m_1(k1)
//   Delta-_{k1,k2} = D^{k1} prod_{i<k2} (xD + 2c - 1 - 2(i+m)) / (2^{m+k2} (m+k2)!) e-, m = m_0(k1)
//
// together with x^j Delta_{0,k} for j >= 1.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/operator.hpp"

namespace cherednik {

struct BasisLabel {
    Parity sign = Parity::Plus;
    unsigned x_power = 0;  // j of x^j Delta_{0,k}; 0 for Delta_{k1,k2}
    unsigned k1 = 0;       // always 0 when x_power > 0
    unsigned k2 = 0;

    static BasisLabel delta(Parity sign, unsigned k1, unsigned k2) { return {sign, 0, k1, k2}; }
    static BasisLabel x_delta(Parity sign, unsigned j, unsigned k2) { return {sign, j, 0, k2}; }

    // Filtration degree: k1 + 2 k2, resp. j + 2 k2.
    unsigned total_degree() const { return x_power + k1 + 2 * k2; }
    // Degree in the Z-grading x -> 1, D -> -1.
    int grading() const { return static_cast<int>(x_power) - static_cast<int>(k1); }

    std::string to_string() const;

    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

// The undivided numerator D^{k1} prod(...) e+- and the denominator 2^{m+k2}(m+k2)!.
Operator delta_numerator(Parity sign, unsigned k1, unsigned k2, const DunklMode& mode = DunklMode::symbolic());
Integer delta_denominator(Parity sign, unsigned k1, unsigned k2);
Operator delta_basis(Parity sign, unsigned k1, unsigned k2, const DunklMode& mode = DunklMode::symbolic());

Operator basis_element(const BasisLabel& label, const DunklMode& mode = DunklMode::symbolic());

// All labels of one sign with total degree <= max_total_degree.
std::vector<std::pair<BasisLabel, Operator>> basis_enumerate(Parity sign, unsigned max_total_degree,
                                                             const DunklMode& mode = DunklMode::symbolic());
std::vector<BasisLabel> basis_labels(Parity sign, unsigned max_total_degree);

// Z[c]-coordinates of a divided-power member in the Delta basis.
// Throws NotInDP, PreconditionError (numeric mode) or NonIntegralCoefficients.
std::map<BasisLabel, CoefPoly> decompose_in_basis(const Operator& q);

// Inverse of decompose_in_basis.
Operator combine_basis(const std::map<BasisLabel, CoefPoly>& coeffs, const DunklMode& mode = DunklMode::symbolic());

// Number of basis labels (both signs) of total degree exactly m.
unsigned graded_dimension(unsigned m);

struct ModPRow {
    long exponent;                       // input x^k
    std::map<long, unsigned long> image; // output exponent -> residue in [0, p)
};

struct ModPTable {
    unsigned long prime;
    std::vector<ModPRow> rows;
};

// act(q, k) mod p for 0 <= k <= max_exponent. Numeric mode only.
ModPTable reduce_mod_p(const Operator& q, unsigned long prime, long max_exponent);

bool is_prime(unsigned long n);

}  // namespace cherednik
