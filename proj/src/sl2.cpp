#include "cherednik/sl2.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

// (1 - 2c)/2
CoefPoly half_shift(const DunklMode& mode) { return (CoefPoly(1) - mode.parameter() * Rational(2)) / Rational(2); }

}  // namespace

Sl2Triple build_triple(const DunklMode& mode) {
    const Operator ep = Operator::e_plus(mode);
    const Operator x = Operator::x(mode);
    const Operator d = Operator::dunkl(mode);
    Sl2Triple t;
    t.e = compose(power(x, 2), ep) * CoefPoly(make_rational(-1, 2));
    t.h = compose(compose(x, d) + Operator::scalar(mode, half_shift(mode)), ep);
    t.f = compose(power(d, 2), ep) * CoefPoly(make_rational(1, 2));
    return t;
}

Operator casimir(const DunklMode& mode) {
    const Sl2Triple t = build_triple(mode);
    return t.e * t.f + t.f * t.e + power(t.h, 2) * CoefPoly(make_rational(1, 2));
}

CoefPoly casimir_scalar(const DunklMode& mode) {
    const CoefPoly c = mode.parameter();
    return (CoefPoly(1) - c * Rational(2)) * (CoefPoly(3) + c * Rational(2)) * make_rational(-1, 8);
}

Operator sigma(unsigned a, unsigned b, unsigned k, const DunklMode& mode) {
    const Sl2Triple t = build_triple(mode);
    const Operator ep = Operator::e_plus(mode);
    Operator acc = ep;
    for (unsigned i = 0; i < k; ++i) {
        const CoefPoly shift = half_shift(mode) + CoefPoly(Rational(2 * static_cast<long>(i + b)));
        acc = compose(t.h - ep * shift, acc);
    }
    acc = compose(power(t.f * CoefPoly(2), b), acc);
    acc = compose(power(t.e * CoefPoly(-2), a), acc);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, b + k);
    acc *= CoefPoly(make_rational(1, two_pow * factorial(b + k)));
    return acc;
}

BasisLabel sigma_label(unsigned a, unsigned b, unsigned k) {
    if (a == 0) return BasisLabel::delta(Parity::Plus, 2 * b, k);
    if (b != 0) throw PreconditionError("sigma_label: mixed E and F powers have no single basis label");
    return BasisLabel::x_delta(Parity::Plus, 2 * a, k);
}

std::vector<std::pair<BasisLabel, Operator>> spherical_basis(unsigned max_degree, const DunklMode& mode) {
    std::vector<std::pair<BasisLabel, Operator>> out;
    for (unsigned k = 0; 2 * k <= max_degree; ++k) {
        for (unsigned n = 0; 2 * n + 2 * k <= max_degree; ++n) {
            const BasisLabel l = BasisLabel::delta(Parity::Plus, 2 * n, k);
            out.emplace_back(l, basis_element(l, mode));
        }
        for (unsigned n = 0; 2 * n + 2 + 2 * k <= max_degree; ++n) {
            const BasisLabel l = BasisLabel::x_delta(Parity::Plus, 2 * n + 2, k);
            out.emplace_back(l, basis_element(l, mode));
        }
    }
    return out;
}

}  // namespace cherednik
