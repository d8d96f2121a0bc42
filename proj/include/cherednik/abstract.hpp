#pragma once

// Membership in H_c(R): operators of the Laurent engine that fix R[x] and the
// shifted module x^{-1}|x|^{1+2c} R[x], spanned by mu_j = x^{j-1}|x|^{1+2c}.
//
// mu_j has parity j-1 under s and behaves like a monomial of exponent j + 2c,
// so a graded piece acts on it through its action polynomial evaluated at
// t = floor((j-1)/2) + 1/2 + c, landing on mu_{j+n}.

#include <map>
#include <string>
#include <vector>

#include "cherednik/operator.hpp"
#include "cherednik/weyl.hpp"

namespace cherednik {

struct ShiftedModuleElement {
    long index;  // j of mu_j
    CoefPoly coefficient;
    friend bool operator==(const ShiftedModuleElement&, const ShiftedModuleElement&) = default;
};

// index -> coefficient, negative indices kept.
using ShiftedImage = std::map<long, CoefPoly>;

// Image of mu_j with out-of-module terms (negative index) retained.
ShiftedImage shifted_image(const Operator& q, long j);

// Image of mu_j; throws OutOfModule if a term with negative index survives.
std::vector<ShiftedModuleElement> act_on_shifted(const Operator& q, long j);

// q maps span{mu_j : j >= floor} into itself, tested on floor <= j <= floor + span.
bool fixes_shifted(const Operator& q, long floor, long span);

// Bound on j used by in_Hc: 2N + 2 max|n| + 4.
long shifted_check_bound(const Operator& q, int degree_bound);

// q fixes R[x] and x^{-1}|x|^{1+2c} R[x]. Coefficients on the shifted module
// may lie in R (x) Q; only the out-of-module terms must vanish.
bool in_Hc(const Operator& q, int degree_bound);
bool in_Hc(const Operator& q);

struct FourComponents {
    // e+ q e+, e- q e-, e- q e+, e+ q e-
    Operator b, b_bar, a, a_bar;
    bool b_ok = false, b_bar_ok = false, a_ok = false, a_bar_ok = false;

    bool all_ok() const { return b_ok && b_bar_ok && a_ok && a_bar_ok; }
    Operator sum() const { return b + b_bar + a + a_bar; }
};

// Splits q by parity and tests each part against its own membership rule:
//   B:    fixes R[x],           fixes |x|^{1+2c} R[x]
//   Bbar: x^-1 q x fixes R[x],  x q x^-1 fixes |x|^{1+2c} R[x]
//   A:    fixes R[x],           x q fixes |x|^{1+2c} R[x]
//   Abar: q x fixes R[x],       x q x^-1 fixes |x|^{1+2c} R[x]
FourComponents four_component_split(const Operator& q);

struct LogValue {
    CoefPoly plain;    // coefficient of x^{n+d}
    CoefPoly logpart;  // coefficient of x^{n+d} log x
    friend bool operator==(const LogValue&, const LogValue&) = default;
};

// F(x^n log x) = f'(n) x^{n+d} + f(n) x^{n+d} log x for a homogeneous q.
// Throws PreconditionError unless q has exactly one piece.
LogValue log_act(const WeylOp& q, long n);

// Same for one graded piece of the Cherednik engine. The action polynomial is
// a function of t = (n - p)/2, so its exponent derivative carries a factor 1/2.
LogValue log_act(const GradedOp& piece, long n);

struct EquivalenceRow {
    Rational c;
    std::string kind;      // "basis" or "non-member"
    std::string operator_label;
    Operator op;
    bool in_dp = false;
    bool in_hc = false;
    bool agree() const { return in_dp == in_hc; }
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;
    // Integer values of c with a disagreement.
    std::vector<Rational> failing_integer_c;
    bool ok() const { return failing_integer_c.empty(); }
};

// For each c: every basis element with total degree <= degree_bound, then
// sample_count constructed non-members (seeded). Disagreements at integer c
// are failures; half-integer rows are findings only.
EquivalenceReport equivalence_report(const std::vector<Rational>& c_values, unsigned degree_bound,
                                     unsigned sample_count, unsigned long seed = 20240601);

// A random operator certified to lie outside the divided power extension.
struct NonMember {
    std::string label;
    Operator op;
};
NonMember make_non_member(const DunklMode& mode, unsigned long seed);

}  // namespace cherednik
