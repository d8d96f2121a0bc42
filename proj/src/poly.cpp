#include "cherednik/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

#include "cherednik/errors.hpp"

namespace cherednik {

Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace {

struct Term {
    Rational coeff;
    int c_pow;
    int t_pow;
};

void append_power(std::string& out, const char* var, int pow) {
    out += var;
    if (pow > 1) out += "^" + std::to_string(pow);
}

// Renders terms in the cli grammar: rational literals, c, t, ^, *, +, -.
std::string render_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : terms) {
        Rational mag = abs(term.coeff);
        bool negative = sgn(term.coeff) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        bool has_var = term.c_pow > 0 || term.t_pow > 0;
        bool need_star = false;
        if (!has_var || mag != 1) {
            out += mag.get_str();
            need_star = true;
        }
        if (term.c_pow > 0) {
            if (need_star) out += "*";
            append_power(out, "c", term.c_pow);
            need_star = true;
        }
        if (term.t_pow > 0) {
            if (need_star) out += "*";
            append_power(out, "t", term.t_pow);
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- CoefPoly

CoefPoly::CoefPoly(long value) : CoefPoly(Rational(value)) {}

CoefPoly::CoefPoly(const Rational& value) {
    if (value != 0) coeffs_.push_back(value);
}

CoefPoly::CoefPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& q : coeffs_) q.canonicalize();
    trim();
}

CoefPoly CoefPoly::parameter() { return CoefPoly(std::vector<Rational>{0, 1}); }

void CoefPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational CoefPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational CoefPoly::eval(const Rational& c) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
    return acc;
}

bool CoefPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

Integer CoefPoly::content() const {
    Integer g = 0;
    for (const auto& q : coeffs_) {
        if (!is_integer(q)) throw NonIntegralInput("coefficient " + q.get_str() + " is not an integer");
        g = gcd(g, q.get_num());
    }
    return g;
}

Integer CoefPoly::denominator_lcm() const {
    Integer l = 1;
    for (const auto& q : coeffs_) l = lcm(l, q.get_den());
    return l;
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    CoefPoly r;
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

CoefPoly& CoefPoly::operator*=(const CoefPoly& o) { return *this = *this * o; }

CoefPoly& CoefPoly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& q : coeffs_) q *= s;
    return *this;
}

CoefPoly& CoefPoly::operator/=(const Rational& s) {
    if (s == 0) throw PreconditionError("division of a polynomial by zero");
    for (auto& q : coeffs_) q /= s;
    return *this;
}

CoefPoly CoefPoly::operator-() const {
    CoefPoly r = *this;
    for (auto& q : r.coeffs_) q = -q;
    return r;
}

std::string CoefPoly::to_string() const {
    std::vector<Term> terms;
    for (int i = degree(); i >= 0; --i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0) terms.push_back({coeffs_[static_cast<std::size_t>(i)], i, 0});
    return render_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const CoefPoly& p) { return os << p.to_string(); }

// -------------------------------------------------------------- ActionPoly

ActionPoly::ActionPoly(long value) : ActionPoly(CoefPoly(value)) {}
ActionPoly::ActionPoly(const Rational& value) : ActionPoly(CoefPoly(value)) {}

ActionPoly::ActionPoly(const CoefPoly& value) {
    if (!value.is_zero()) coeffs_.push_back(value);
}

ActionPoly::ActionPoly(std::vector<CoefPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ActionPoly ActionPoly::variable() { return ActionPoly(std::vector<CoefPoly>{CoefPoly{}, CoefPoly{1}}); }

ActionPoly ActionPoly::affine(const CoefPoly& a, const CoefPoly& b) {
    return ActionPoly(std::vector<CoefPoly>{b, a});
}

void ActionPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CoefPoly ActionPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(i)];
}

CoefPoly ActionPoly::eval(const Rational& t) const {
    CoefPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

CoefPoly ActionPoly::eval(const CoefPoly& t) const {
    CoefPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t;
        acc += *it;
    }
    return acc;
}

ActionPoly ActionPoly::shifted(const Rational& a) const {
    if (a == 0) return *this;
    // Horner in (t + a).
    std::vector<CoefPoly> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<CoefPoly> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * a;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return ActionPoly(std::move(acc));
}

ActionPoly ActionPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<CoefPoly> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return ActionPoly(std::move(out));
}

ActionPoly ActionPoly::specialize_c(const Rational& c) const {
    std::vector<CoefPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.emplace_back(p.eval(c));
    return ActionPoly(std::move(out));
}

int ActionPoly::c_degree() const {
    int d = -1;
    for (const auto& p : coeffs_) d = std::max(d, p.degree());
    return d;
}

bool ActionPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CoefPoly& p) { return p.is_integral(); });
}

std::pair<ActionPoly, ActionPoly> ActionPoly::divmod(const ActionPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    const CoefPoly& lead = divisor.coeffs_.back();
    if (!lead.is_constant()) throw PreconditionError("divisor leading coefficient must be a constant");
    const Rational lc = lead.constant_term();
    const int dd = divisor.degree();
    std::vector<CoefPoly> rem = coeffs_;
    std::vector<CoefPoly> quot(static_cast<std::size_t>(std::max(0, degree() - dd + 1)));
    for (int i = degree(); i >= dd; --i) {
        const CoefPoly q = rem[static_cast<std::size_t>(i)] / lc;
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {ActionPoly(std::move(quot)), ActionPoly(std::move(rem))};
}

ActionPoly& ActionPoly::operator+=(const ActionPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ActionPoly& ActionPoly::operator-=(const ActionPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

ActionPoly operator*(const ActionPoly& a, const ActionPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CoefPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ActionPoly(std::move(out));
}

ActionPoly& ActionPoly::operator*=(const CoefPoly& s) {
    for (auto& p : coeffs_) p *= s;
    trim();
    return *this;
}

ActionPoly& ActionPoly::operator/=(const Rational& s) {
    for (auto& p : coeffs_) p /= s;
    return *this;
}

ActionPoly ActionPoly::operator-() const {
    ActionPoly r = *this;
    for (auto& p : r.coeffs_) p = -p;
    return r;
}

std::string ActionPoly::to_string() const {
    std::vector<Term> terms;
    for (int i = degree(); i >= 0; --i) {
        const auto& p = coeffs_[static_cast<std::size_t>(i)];
        for (int j = p.degree(); j >= 0; --j)
            if (p.coeff(j) != 0) terms.push_back({p.coeff(j), j, i});
    }
    return render_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const ActionPoly& p) { return os << p.to_string(); }

// ------------------------------------------------------- binomial / Newton

ActionPoly binomial_poly(unsigned k) {
    ActionPoly acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc = acc * ActionPoly::affine(1, Rational(-static_cast<long>(i)));
        acc /= Rational(i + 1);
    }
    return acc;
}

ActionPoly falling_product(std::span<const ActionPoly> factors) {
    ActionPoly acc(1);
    for (const auto& f : factors) {
        if (f.degree() > 1) throw PreconditionError("falling_product factor is not affine: " + f.to_string());
        acc = acc * f;
    }
    return acc;
}

std::vector<CoefPoly> to_newton(const ActionPoly& f) {
    if (f.is_zero()) return {};
    const int n = f.degree();
    std::vector<CoefPoly> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v.push_back(f.eval(static_cast<long>(i)));
    // After pass k, v[k] holds the k-th forward difference at 0.
    for (int k = 1; k <= n; ++k)
        for (int i = n; i >= k; --i) v[static_cast<std::size_t>(i)] -= v[static_cast<std::size_t>(i - 1)];
    return v;
}

ActionPoly from_newton(std::span<const CoefPoly> coeffs) {
    ActionPoly acc;
    ActionPoly basis(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) {
            basis = basis * ActionPoly::affine(1, Rational(-static_cast<long>(k - 1)));
            basis /= Rational(static_cast<long>(k));
        }
        if (!coeffs[k].is_zero()) acc += basis * coeffs[k];
    }
    return acc;
}

Integer integer_content(const ActionPoly& f) {
    Integer g = 0;
    for (const auto& p : f.coeffs()) g = gcd(g, p.content());
    return g;
}

}  // namespace cherednik
