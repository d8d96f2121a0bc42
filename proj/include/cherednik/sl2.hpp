#pragma once

// The sl2 triple inside e+ H e+:
//   E = -1/2 x^2 e+,   H = (xD + (1-2c)/2) e+,   F = 1/2 D^2 e+
// with Casimir C = EF + FE + H^2/2 acting by -(1-2c)(3+2c)/8.

#include <string>
#include <utility>
#include <vector>

#include "cherednik/basis.hpp"

namespace cherednik {

struct Sl2Triple {
    Operator e, h, f;
};

Sl2Triple build_triple(const DunklMode& mode = DunklMode::symbolic());

Operator casimir(const DunklMode& mode = DunklMode::symbolic());

// -(1-2c)(3+2c)/8
CoefPoly casimir_scalar(const DunklMode& mode = DunklMode::symbolic());

// Sigma_{a,b,k} = (-2E)^a (2F)^b prod_{i<k} (H - (1-2c)/2 - 2(i+b)) / (2^{b+k} (b+k)!)
// The third index is called k here; in the formula c is the parameter.
Operator sigma(unsigned a, unsigned b, unsigned k, const DunklMode& mode = DunklMode::symbolic());

// The basis label that sigma(a, b, k) is expected to equal:
// Delta+_{2b,k} when a = 0, otherwise x^{2a} Delta+_{0,k} (requires b = 0).
BasisLabel sigma_label(unsigned a, unsigned b, unsigned k);

// {Delta+_{2n,k}, x^{2n+2} Delta+_{0,k}} of total degree <= N.
std::vector<std::pair<BasisLabel, Operator>> spherical_basis(unsigned max_degree,
                                                             const DunklMode& mode = DunklMode::symbolic());

}  // namespace cherednik
