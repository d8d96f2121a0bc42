#include "cherednik/basis.hpp"

#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

std::string BasisLabel::to_string() const {
    std::ostringstream os;
    if (x_power > 0) {
        os << 'x';
        if (x_power > 1) os << '^' << x_power;
        os << '*';
    }
    os << "Delta" << parity_char(sign) << '(' << k1 << ',' << k2 << ')';
    return os.str();
}

namespace {

unsigned delta_m(Parity sign, unsigned k1) { return sign == Parity::Plus ? m_delta(1, k1) : m_delta(0, k1); }

}  // namespace

Integer delta_denominator(Parity sign, unsigned k1, unsigned k2) {
    const unsigned m = delta_m(sign, k1);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m + k2);
    return two_pow * factorial(m + k2);
}

Operator delta_numerator(Parity sign, unsigned k1, unsigned k2, const DunklMode& mode) {
    const unsigned m = delta_m(sign, k1);
    const Operator xd = compose(Operator::x(mode), Operator::dunkl(mode));
    // Shift so that the factor reads xD - 2(i+m) resp. xD + 2c - 1 - 2(i+m).
    const CoefPoly base = sign == Parity::Plus ? CoefPoly{} : mode.parameter() * Rational(2) - CoefPoly(1);
    Operator product = Operator::e(sign, mode);
    for (unsigned i = 0; i < k2; ++i) {
        const CoefPoly shift = base - CoefPoly(Rational(2 * static_cast<long>(i + m)));
        product = compose(xd + Operator::scalar(mode, shift), product);
    }
    return compose(power(Operator::dunkl(mode), k1), product);
}

Operator delta_basis(Parity sign, unsigned k1, unsigned k2, const DunklMode& mode) {
    Operator op = delta_numerator(sign, k1, k2, mode);
    op *= CoefPoly(make_rational(1, delta_denominator(sign, k1, k2)));
    return op;
}

Operator basis_element(const BasisLabel& label, const DunklMode& mode) {
    const Operator delta = delta_basis(label.sign, label.k1, label.k2, mode);
    if (label.x_power == 0) return delta;
    return compose(Operator::x_power(mode, static_cast<int>(label.x_power)), delta);
}

std::vector<BasisLabel> basis_labels(Parity sign, unsigned max_total_degree) {
    std::vector<BasisLabel> out;
    for (unsigned k2 = 0; 2 * k2 <= max_total_degree; ++k2) {
        for (unsigned n = 0; n + 2 * k2 <= max_total_degree; ++n) out.push_back(BasisLabel::delta(sign, n, k2));
        for (unsigned j = 1; j + 2 * k2 <= max_total_degree; ++j) out.push_back(BasisLabel::x_delta(sign, j, k2));
    }
    return out;
}

std::vector<std::pair<BasisLabel, Operator>> basis_enumerate(Parity sign, unsigned max_total_degree,
                                                             const DunklMode& mode) {
    std::vector<std::pair<BasisLabel, Operator>> out;
    for (const auto& label : basis_labels(sign, max_total_degree)) out.emplace_back(label, basis_element(label, mode));
    return out;
}

std::map<BasisLabel, CoefPoly> decompose_in_basis(const Operator& q) {
    if (!q.mode().is_symbolic()) throw PreconditionError("decompose_in_basis requires symbolic c");
    const DpVerdict verdict = dp_verdict(q);
    if (!verdict.witness) throw NotInDP(verdict.reason);

    std::map<BasisLabel, CoefPoly> out;
    for (const auto& [n, piece] : q.pieces()) {
        for (Parity par : {Parity::Plus, Parity::Minus}) {
            const ActionPoly& f = piece.action(par);
            if (f.is_zero()) continue;
            const int truncation = std::max(f.degree(), n < 0 ? -n : 0);
            // The k-th lattice generator is the action polynomial of the k-th basis element.
            const IntLattice lattice = int_basis(par, n, DunklMode::symbolic(), truncation);
            const auto coords = triangular_coordinates(lattice.generators, f);
            if (!coords) throw NonIntegralCoefficients("piece of degree " + std::to_string(n) + " is outside the lattice span");
            for (std::size_t k = 0; k < coords->size(); ++k) {
                const CoefPoly& a = (*coords)[k];
                if (a.is_zero()) continue;
                if (!a.is_integral())
                    throw NonIntegralCoefficients("coefficient " + a.to_string() + " at degree " + std::to_string(n));
                const auto k2 = static_cast<unsigned>(k);
                const BasisLabel label = n < 0 ? BasisLabel::delta(par, static_cast<unsigned>(-n), k2)
                                               : BasisLabel::x_delta(par, static_cast<unsigned>(n), k2);
                out[label] = a;
            }
        }
    }
    return out;
}

Operator combine_basis(const std::map<BasisLabel, CoefPoly>& coeffs, const DunklMode& mode) {
    Operator acc(mode);
    for (const auto& [label, a] : coeffs) acc += basis_element(label, mode) * a;
    return acc;
}

unsigned graded_dimension(unsigned m) {
    unsigned count = 0;
    for (Parity sign : {Parity::Plus, Parity::Minus})
        for (const auto& label : basis_labels(sign, m))
            if (label.total_degree() == m) ++count;
    return count;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ModPTable reduce_mod_p(const Operator& q, unsigned long prime, long max_exponent) {
    if (!q.mode().is_numeric()) throw PreconditionError("mod-p tables need a numeric value of c");
    if (!is_prime(prime)) throw PreconditionError(std::to_string(prime) + " is not prime");
    const DpVerdict verdict = dp_verdict(q);
    if (!verdict.witness) throw NotInDP(verdict.reason);
    ModPTable table{prime, {}};
    const Integer p(prime);
    for (long k = 0; k <= max_exponent; ++k) {
        ModPRow row{k, {}};
        for (const auto& [e, v] : act(q, k)) {
            const Rational value = v.constant_term();
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), value.get_num_mpz_t(), p.get_mpz_t());
            if (r != 0) row.image[e] = r.get_ui();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace cherednik
