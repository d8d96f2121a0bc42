#pragma once

// JSON encoding shared by the CLI and the tests. Rationals are strings
// ("3", "-1/2"); a CoefPoly is an array indexed by c-degree; an ActionPoly is
// an array indexed by t-degree of CoefPoly arrays.

#include <json.hpp>

#include "cherednik/abstract.hpp"
#include "cherednik/basis.hpp"
#include "cherednik/sl2.hpp"
#include "cherednik/weyl.hpp"

namespace cherednik {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const CoefPoly& p);
Json to_json(const ActionPoly& p);
Json to_json(const LaurentPoly& v);
Json to_json(const DunklMode& mode);  // {"mode": ..., "c": ...}
Json to_json(const Operator& q);
Json to_json(const WeylOp& q);
Json to_json(const IntLattice& lattice);
Json to_json(const DpVerdict& verdict);
Json to_json(const std::map<BasisLabel, CoefPoly>& coords);
Json to_json(const ModPTable& table);
Json to_json(const EquivalenceReport& report);
Json to_json(const FourComponents& split);

Rational rational_from_json(const Json& j);
CoefPoly coef_poly_from_json(const Json& j);
ActionPoly action_poly_from_json(const Json& j);
DunklMode mode_from_json(const Json& j);
Operator operator_from_json(const Json& j);
WeylOp weyl_from_json(const Json& j);

}  // namespace cherednik
