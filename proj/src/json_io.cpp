#include "cherednik/json_io.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const CoefPoly& p) {
    Json out = Json::array();
    for (const auto& q : p.coeffs()) out.push_back(to_json(q));
    return out;
}

Json to_json(const ActionPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Json to_json(const LaurentPoly& v) {
    Json out = Json::array();
    for (const auto& [e, coef] : v) out.push_back({{"exponent", e}, {"coefficient", to_json(coef)}});
    return out;
}

Json to_json(const DunklMode& mode) {
    Json out = Json::object();
    if (mode.is_symbolic()) {
        out["mode"] = "symbolic";
    } else {
        out["mode"] = "numeric";
        out["c"] = to_json(mode.c_value());
    }
    return out;
}

Json to_json(const Operator& q) {
    Json out = to_json(q.mode());
    out["parity"] = "split";
    Json pieces = Json::array();
    for (const auto& [n, p] : q.pieces())
        pieces.push_back({{"degree", n}, {"f_plus", to_json(p.f_plus)}, {"f_minus", to_json(p.f_minus)}});
    out["pieces"] = std::move(pieces);
    return out;
}

Json to_json(const WeylOp& q) {
    Json out = {{"mode", "symbolic"}, {"parity", "none"}};
    Json pieces = Json::array();
    for (const auto& [n, f] : q.pieces()) pieces.push_back({{"degree", n}, {"f", to_json(f)}});
    out["pieces"] = std::move(pieces);
    return out;
}

Json to_json(const IntLattice& lattice) {
    Json out = to_json(lattice.mode);
    out["parity"] = std::string(1, parity_char(lattice.parity));
    out["degree"] = lattice.degree;
    out["truncation"] = lattice.truncation;
    Json gens = Json::array();
    for (const auto& g : lattice.generators) {
        Json newton = Json::array();
        for (const auto& a : to_newton(g)) newton.push_back(to_json(a));
        gens.push_back({{"t_degree", g.degree()}, {"poly", to_json(g)}, {"newton", std::move(newton)}});
    }
    out["generators"] = std::move(gens);
    return out;
}

Json to_json(const DpVerdict& verdict) {
    if (!verdict.witness) return {{"member", false}, {"reason", verdict.reason}};
    return {{"member", true},
            {"denominator", verdict.witness->denominator.get_str()},
            {"numerator", to_json(verdict.witness->numerator)}};
}

Json to_json(const std::map<BasisLabel, CoefPoly>& coords) {
    Json out = Json::array();
    for (const auto& [label, a] : coords)
        out.push_back({{"label", label.to_string()},
                       {"sign", std::string(1, parity_char(label.sign))},
                       {"x_power", label.x_power},
                       {"k1", label.k1},
                       {"k2", label.k2},
                       {"coefficient", to_json(a)}});
    return out;
}

Json to_json(const ModPTable& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json image = Json::array();
        for (const auto& [e, r] : row.image) image.push_back({{"exponent", e}, {"residue", r}});
        rows.push_back({{"exponent", row.exponent}, {"image", std::move(image)}});
    }
    return {{"prime", table.prime}, {"rows", std::move(rows)}};
}

Json to_json(const EquivalenceReport& report) {
    Json out = Json::array();
    for (const auto& row : report.rows)
        out.push_back({{"c", to_json(row.c)},
                       {"kind", row.kind},
                       {"label", row.operator_label},
                       {"operator", to_json(row.op)},
                       {"in_dp", row.in_dp},
                       {"in_Hc", row.in_hc},
                       {"agree", row.agree()}});
    return out;
}

Json to_json(const FourComponents& split) {
    auto part = [](const Operator& op, bool ok) { return Json{{"operator", to_json(op)}, {"conditions_hold", ok}}; };
    return {{"B", part(split.b, split.b_ok)},
            {"B_bar", part(split.b_bar, split.b_bar_ok)},
            {"A", part(split.a, split.a_ok)},
            {"A_bar", part(split.a_bar, split.a_bar_ok)}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw PreconditionError("rational must be a string or an integer");
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw PreconditionError("malformed rational \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return q;
}

CoefPoly coef_poly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& e : j) coeffs.push_back(rational_from_json(e));
    return CoefPoly(std::move(coeffs));
}

ActionPoly action_poly_from_json(const Json& j) {
    std::vector<CoefPoly> coeffs;
    for (const auto& e : j) coeffs.push_back(coef_poly_from_json(e));
    return ActionPoly(std::move(coeffs));
}

DunklMode mode_from_json(const Json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "symbolic") return DunklMode::symbolic();
    if (mode == "numeric") return DunklMode::numeric(rational_from_json(j.at("c")));
    throw PreconditionError("unknown mode \"" + mode + "\"");
}

Operator operator_from_json(const Json& j) {
    const DunklMode mode = mode_from_json(j);
    Operator out(mode);
    for (const auto& p : j.at("pieces"))
        out += Operator::piece(mode, p.at("degree").get<int>(), action_poly_from_json(p.at("f_plus")),
                               action_poly_from_json(p.at("f_minus")));
    return out;
}

WeylOp weyl_from_json(const Json& j) {
    WeylOp out;
    for (const auto& p : j.at("pieces")) out.add_piece(p.at("degree").get<int>(), action_poly_from_json(p.at("f")));
    return out;
}

}  // namespace cherednik
