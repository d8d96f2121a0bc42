#include "cherednik/weyl.hpp"

#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

WeylOp WeylOp::piece(int degree, const ActionPoly& f) {
    WeylOp op;
    op.add_piece(degree, f);
    return op;
}

int WeylOp::max_t_degree() const {
    int d = -1;
    for (const auto& [n, f] : pieces_) d = std::max(d, f.degree());
    return d;
}

void WeylOp::add_piece(int degree, const ActionPoly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = pieces_.try_emplace(degree, f);
    if (inserted) return;
    it->second = it->second + f;
    if (it->second.is_zero()) pieces_.erase(it);
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    for (const auto& [n, f] : o.pieces_) add_piece(n, f);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    for (const auto& [n, f] : o.pieces_) add_piece(n, -f);
    return *this;
}

WeylOp& WeylOp::operator*=(const Rational& s) {
    if (s == 0) {
        pieces_.clear();
        return *this;
    }
    for (auto& [n, f] : pieces_) f *= CoefPoly(s);
    return *this;
}

WeylOp WeylOp::operator-() const {
    WeylOp out = *this;
    out *= Rational(-1);
    return out;
}

std::string WeylOp::to_string() const {
    if (pieces_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, f] : pieces_) {
        if (!first) os << "; ";
        first = false;
        os << "degree " << n << ": " << f.to_string();
    }
    return os.str();
}

WeylOp hasse(unsigned k) { return WeylOp::piece(-static_cast<int>(k), binomial_poly(k)); }
WeylOp weyl_x() { return WeylOp::x_power(1); }
WeylOp weyl_d() { return WeylOp::piece(-1, ActionPoly::variable()); }

WeylOp weyl_compose(const WeylOp& a, const WeylOp& b) {
    WeylOp out;
    for (const auto& [m, g] : b.pieces())
        for (const auto& [n, f] : a.pieces()) out.add_piece(n + m, f.shifted(Rational(m)) * g);
    return out;
}

WeylOp weyl_power(const WeylOp& a, unsigned n) {
    WeylOp acc = WeylOp::identity();
    for (unsigned i = 0; i < n; ++i) acc = weyl_compose(a, acc);
    return acc;
}

WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b) { return weyl_compose(a, b) - weyl_compose(b, a); }

LaurentPoly act(const WeylOp& q, long k) {
    LaurentPoly out;
    for (const auto& [n, f] : q.pieces()) {
        CoefPoly v = f.eval(k);
        if (!v.is_zero()) out[k + n] = std::move(v);
    }
    return out;
}

namespace {

void require_polynomial_preserving(const WeylOp& q) {
    for (const auto& [n, f] : q.pieces()) {
        for (long t = 0; t < -n; ++t)
            if (!f.eval(t).is_zero())
                throw NotPolynomialPreserving("nonzero image below x^0 at exponent " + std::to_string(t));
        if (!is_r_valued(f, DunklMode::symbolic()))
            throw NotPolynomialPreserving("non-integral values in degree " + std::to_string(n));
    }
}

}  // namespace

Integer weyl_divisor(const WeylOp& q) {
    require_polynomial_preserving(q);
    Integer d = 0;
    for (const auto& [n, f] : q.pieces()) d = gcd(d, divisor_of_values(f, DunklMode::symbolic()));
    return d;
}

std::string WeylLabel::to_string() const {
    std::ostringstream os;
    if (x_power > 0) {
        os << 'x';
        if (x_power > 1) os << '^' << x_power;
        if (hasse_order > 0) os << '*';
    }
    if (hasse_order > 0 || x_power == 0) os << "H" << hasse_order;
    return os.str();
}

std::vector<std::pair<WeylLabel, WeylOp>> weyl_dp_basis(unsigned max_total_degree) {
    std::vector<std::pair<WeylLabel, WeylOp>> out;
    for (unsigned total = 0; total <= max_total_degree; ++total)
        for (unsigned l = 0; l <= total; ++l) {
            const unsigned k = total - l;
            out.push_back({{k, l}, weyl_compose(WeylOp::x_power(static_cast<int>(k)), hasse(l))});
        }
    return out;
}

std::optional<std::map<WeylLabel, Integer>> weyl_decompose(const WeylOp& q) {
    std::map<WeylLabel, Integer> out;
    for (const auto& [n, f] : q.pieces()) {
        const auto alpha = to_newton(f);
        for (std::size_t l = 0; l < alpha.size(); ++l) {
            if (alpha[l].is_zero()) continue;
            const long k = n + static_cast<long>(l);
            if (!alpha[l].is_constant() || !is_integer(alpha[l].constant_term()) || k < 0) return std::nullopt;
            out[{static_cast<unsigned>(k), static_cast<unsigned>(l)}] = alpha[l].constant_term().get_num();
        }
    }
    return out;
}

TensorDivisorReport tensor_divisor_report(const Operator& a, const WeylOp& b, const Integer& d, long table_size) {
    TensorDivisorReport r;
    r.left = operator_divisor(a);
    r.right = weyl_divisor(b);
    // x^k (x) q^m |-> sum a_{k,i} b_{m,j} x^i (x) q^j; the gcd of all these
    // coefficients is the divisor of a (x) b.
    std::vector<LaurentPoly> left_table, right_table;
    for (long k = 0; k <= table_size; ++k) left_table.push_back(act(a, k));
    for (long m = 0; m <= table_size; ++m) right_table.push_back(act(b, m));
    Integer g = 0;
    for (const auto& lrow : left_table)
        for (const auto& rrow : right_table)
            for (const auto& [i, u] : lrow)
                for (const auto& [j, v] : rrow) g = gcd(g, (u * v).content());
    r.product = g;
    r.divides = d != 0 && g % d == 0;
    if (!r.divides) {
        r.holds = true;
        return r;
    }
    // Look for d = d1 d2 with d1 | left and d2 | right.
    const Integer ad = abs(d);
    for (Integer d1 = 1; d1 <= ad; ++d1) {
        if (ad % d1 != 0) continue;
        const Integer d2 = ad / d1;
        if ((r.left == 0 || r.left % d1 == 0) && (r.right == 0 || r.right % d2 == 0)) {
            r.holds = true;
            break;
        }
    }
    return r;
}

bool tensor_divisor_check(const Operator& a, const WeylOp& b, const Integer& d) {
    return tensor_divisor_report(a, b, d).holds;
}

int grothendieck_order(const WeylOp& q) { return std::max(q.max_t_degree(), 0); }

bool bracket_lowers_order(const WeylOp& q) {
    const WeylOp br = weyl_commutator(q, weyl_x());
    if (br.is_zero()) return true;
    return grothendieck_order(br) < grothendieck_order(q);
}

}  // namespace cherednik
