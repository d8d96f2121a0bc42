#include "cherednik/operator.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

long floor_div2(long m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }

Parity parity_of(long k) { return (k % 2 == 0) ? Parity::Plus : Parity::Minus; }

}  // namespace

Operator Operator::piece(const DunklMode& mode, int degree, const ActionPoly& f_plus, const ActionPoly& f_minus) {
    Operator op(mode);
    op.add_piece(GradedOp{degree, mode.apply(f_plus), mode.apply(f_minus)});
    return op;
}

Operator Operator::scalar(const DunklMode& mode, const CoefPoly& value) {
    const ActionPoly v(mode.apply(value));
    return piece(mode, 0, v, v);
}

Operator Operator::x_power(const DunklMode& mode, int n) { return piece(mode, n, 1, 1); }

Operator Operator::dunkl(const DunklMode& mode) {
    // x^{2t} -> 2t x^{2t-1};  x^{2t+1} -> (2t+1-2c) x^{2t}
    return piece(mode, -1, ActionPoly::affine(2, 0), ActionPoly::affine(2, CoefPoly(1) - CoefPoly::parameter() * Rational(2)));
}

Operator Operator::e_plus(const DunklMode& mode) { return piece(mode, 0, 1, 0); }
Operator Operator::e_minus(const DunklMode& mode) { return piece(mode, 0, 0, 1); }
Operator Operator::reflection(const DunklMode& mode) { return piece(mode, 0, 1, -1); }

const GradedOp* Operator::find_piece(int degree) const {
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? nullptr : &it->second;
}

int Operator::max_t_degree() const {
    int d = -1;
    for (const auto& [n, p] : pieces_) d = std::max({d, p.f_plus.degree(), p.f_minus.degree()});
    return d;
}

int Operator::max_abs_degree() const {
    int d = 0;
    for (const auto& [n, p] : pieces_) d = std::max(d, std::abs(n));
    return d;
}

void Operator::add_piece(const GradedOp& piece) {
    if (piece.is_zero()) return;
    auto [it, inserted] = pieces_.try_emplace(piece.degree, piece);
    if (!inserted) {
        it->second.f_plus += piece.f_plus;
        it->second.f_minus += piece.f_minus;
        if (it->second.is_zero()) pieces_.erase(it);
    }
}

void Operator::check_mode(const Operator& o) const {
    if (!(mode_ == o.mode_)) throw ModeMismatch("operators built in modes " + mode_.to_string() + " and " + o.mode_.to_string());
}

Operator& Operator::operator+=(const Operator& o) {
    check_mode(o);
    for (const auto& [n, p] : o.pieces_) add_piece(p);
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    check_mode(o);
    for (const auto& [n, p] : o.pieces_) add_piece(GradedOp{n, -p.f_plus, -p.f_minus});
    return *this;
}

Operator& Operator::operator*=(const CoefPoly& s) {
    const CoefPoly v = mode_.apply(s);
    for (auto it = pieces_.begin(); it != pieces_.end();) {
        it->second.f_plus *= v;
        it->second.f_minus *= v;
        if (it->second.is_zero())
            it = pieces_.erase(it);
        else
            ++it;
    }
    return *this;
}

Operator Operator::operator-() const {
    Operator r = *this;
    r *= CoefPoly(-1);
    return r;
}

std::string Operator::to_string() const {
    if (pieces_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, p] : pieces_) {
        if (!first) os << '\n';
        first = false;
        os << "degree " << n << ": even " << p.f_plus.to_string() << " | odd " << p.f_minus.to_string();
    }
    return os.str();
}

Operator compose(const Operator& a, const Operator& b) {
    if (!(a.mode() == b.mode())) throw ModeMismatch("compose: modes " + a.mode().to_string() + " and " + b.mode().to_string());
    Operator out(a.mode());
    for (const auto& [m, pb] : b.pieces()) {
        const long h = floor_div2(m);
        const bool m_even = (m - 2 * h) == 0;
        for (const auto& [n, pa] : a.pieces()) {
            GradedOp g{n + m, {}, {}};
            if (m_even) {
                // x^{2t} -> x^{2(t+h)},  x^{2t+1} -> x^{2(t+h)+1}
                if (!pb.f_plus.is_zero()) g.f_plus = pa.f_plus.shifted(h) * pb.f_plus;
                if (!pb.f_minus.is_zero()) g.f_minus = pa.f_minus.shifted(h) * pb.f_minus;
            } else {
                // x^{2t} -> x^{2(t+h)+1},  x^{2t+1} -> x^{2(t+h+1)}
                if (!pb.f_plus.is_zero()) g.f_plus = pa.f_minus.shifted(h) * pb.f_plus;
                if (!pb.f_minus.is_zero()) g.f_minus = pa.f_plus.shifted(h + 1) * pb.f_minus;
            }
            out.add_piece(g);
        }
    }
    return out;
}

Operator power(const Operator& a, unsigned n) {
    Operator acc = Operator::identity(a.mode());
    for (unsigned i = 0; i < n; ++i) acc = compose(acc, a);
    return acc;
}

Operator commutator(const Operator& a, const Operator& b) { return compose(a, b) - compose(b, a); }

Operator sandwich(Parity left, const Operator& q, Parity right) {
    Operator out(q.mode());
    const int in_parity = right == Parity::Plus ? 0 : 1;
    const int want = left == Parity::Plus ? 0 : 1;
    for (const auto& [n, p] : q.pieces()) {
        const int out_parity = ((in_parity + n) % 2 + 2) % 2;
        if (out_parity != want) continue;
        GradedOp g{n, {}, {}};
        g.action(right) = p.action(right);
        out.add_piece(g);
    }
    return out;
}

LaurentPoly act(const Operator& q, long k) {
    LaurentPoly out;
    const Parity par = parity_of(k);
    const long t = floor_div2(k);
    for (const auto& [n, p] : q.pieces()) {
        CoefPoly v = p.action(par).eval(Rational(t));
        if (!v.is_zero()) out[k + n] += v;
    }
    return out;
}

LaurentPoly act(const Operator& q, const LaurentPoly& v) {
    LaurentPoly out;
    for (const auto& [k, coef] : v)
        for (const auto& [e, w] : act(q, k)) {
            auto& slot = out[e];
            slot += w * coef;
            if (slot.is_zero()) out.erase(e);
        }
    return out;
}

std::string laurent_to_string(const LaurentPoly& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << '(' << it->second.to_string() << ")*x^" << it->first;
    }
    return os.str();
}

std::map<int, GradedOp> grade_decompose(const Operator& q) { return q.pieces(); }

PolynomialCheck check_preserves_polynomials(const Operator& q) {
    PolynomialCheck best;
    for (const auto& [n, p] : q.pieces()) {
        for (Parity par : {Parity::Plus, Parity::Minus}) {
            const ActionPoly& f = p.action(par);
            if (f.is_zero()) continue;
            const long bound = static_cast<long>(f.degree()) + std::abs(n) + 2;
            for (long t = 0; t <= bound; ++t) {
                const long k = 2 * t + (par == Parity::Plus ? 0 : 1);
                if (!best.ok && k >= best.exponent) break;
                const CoefPoly v = f.eval(Rational(t));
                std::string reason;
                if (k + n < 0 && !v.is_zero())
                    reason = "nonzero image below x^0 at exponent " + std::to_string(k);
                else if (!v.is_integral())
                    reason = "non-integral value at exponent " + std::to_string(k) + ": " + v.to_string();
                if (!reason.empty()) {
                    best = PolynomialCheck{false, k, reason};
                    break;
                }
            }
        }
    }
    return best;
}

bool preserves_polynomials(const Operator& q) { return check_preserves_polynomials(q).ok; }

Integer operator_divisor(const Operator& q) {
    const auto check = check_preserves_polynomials(q);
    if (!check.ok) throw NotPolynomialPreserving(check.reason);
    Integer d = 0;
    for (const auto& [n, p] : q.pieces()) {
        d = gcd(d, divisor_of_values(p.f_plus, q.mode()));
        d = gcd(d, divisor_of_values(p.f_minus, q.mode()));
    }
    return d;
}

DpVerdict dp_verdict(const Operator& q) {
    const auto check = check_preserves_polynomials(q);
    if (!check.ok) return {std::nullopt, check.reason};
    Integer d = 1;
    for (const auto& [n, p] : q.pieces()) {
        for (Parity par : {Parity::Plus, Parity::Minus}) {
            const ActionPoly& f = p.action(par);
            if (f.is_zero()) continue;
            ActionPoly quotient = f;
            if (n < 0) {
                auto [quo, rem] = f.divmod(dunkl_poly(par, static_cast<unsigned>(-n), q.mode()));
                if (!rem.is_zero()) {
                    std::ostringstream why;
                    why << "degree " << n << " " << (par == Parity::Plus ? "even" : "odd")
                        << " action is not divisible by D" << parity_char(par) << "_" << -n;
                    return {std::nullopt, why.str()};
                }
                quotient = std::move(quo);
            }
            // The numerator must be a polynomial in 2t with coefficients in R.
            Rational scale = 1;
            for (const auto& coef : quotient.coeffs()) {
                d = lcm(d, (coef / scale).denominator_lcm());
                scale *= 2;
            }
        }
    }
    Operator numerator = q;
    numerator *= CoefPoly(Rational(d));
    return {DpWitness{d, std::move(numerator)}, {}};
}

std::optional<DpWitness> in_dp(const Operator& q) { return dp_verdict(q).witness; }

}  // namespace cherednik
