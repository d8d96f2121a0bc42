#include "cherednik/abstract.hpp"

#include <random>

#include "cherednik/basis.hpp"
#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

long floor_div2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

ShiftedImage shifted_image(const Operator& q, long j) {
    const long u = floor_div2(j - 1);
    const Parity par = (j - 1 - 2 * u) == 0 ? Parity::Plus : Parity::Minus;
    const CoefPoly t = q.mode().parameter() + CoefPoly(make_rational(2 * u + 1, 2));
    ShiftedImage out;
    for (const auto& [n, piece] : q.pieces()) {
        CoefPoly v = piece.action(par).eval(t);
        if (!v.is_zero()) out[j + n] = std::move(v);
    }
    return out;
}

std::vector<ShiftedModuleElement> act_on_shifted(const Operator& q, long j) {
    std::vector<ShiftedModuleElement> out;
    for (auto& [index, coef] : shifted_image(q, j)) {
        if (index < 0)
            throw OutOfModule("mu_" + std::to_string(j) + " is sent to " + coef.to_string() + " * mu_" +
                                  std::to_string(index),
                              index);
        out.push_back({index, coef});
    }
    return out;
}

bool fixes_shifted(const Operator& q, long floor, long span) {
    for (long j = floor; j <= floor + span; ++j) {
        const ShiftedImage image = shifted_image(q, j);
        if (!image.empty() && image.begin()->first < floor) return false;
    }
    return true;
}

long shifted_check_bound(const Operator& q, int degree_bound) {
    return 2L * degree_bound + 2L * q.max_abs_degree() + 4;
}

bool in_Hc(const Operator& q, int degree_bound) {
    if (!preserves_polynomials(q)) return false;
    return fixes_shifted(q, 0, shifted_check_bound(q, std::max(degree_bound, q.max_t_degree())));
}

bool in_Hc(const Operator& q) { return in_Hc(q, q.max_t_degree()); }

FourComponents four_component_split(const Operator& q) {
    const DunklMode& mode = q.mode();
    const Operator x = Operator::x(mode);
    const Operator x_inv = Operator::x_power(mode, -1);
    const long span = shifted_check_bound(q, q.max_t_degree() + 1) + 2;

    FourComponents out{sandwich(Parity::Plus, q, Parity::Plus), sandwich(Parity::Minus, q, Parity::Minus),
                       sandwich(Parity::Minus, q, Parity::Plus), sandwich(Parity::Plus, q, Parity::Minus)};
    out.b_ok = preserves_polynomials(out.b) && fixes_shifted(out.b, 1, span);
    out.b_bar_ok = preserves_polynomials(x_inv * out.b_bar * x) && fixes_shifted(x * out.b_bar * x_inv, 1, span);
    out.a_ok = preserves_polynomials(out.a) && fixes_shifted(x * out.a, 1, span);
    out.a_bar_ok = preserves_polynomials(out.a_bar * x) && fixes_shifted(x * out.a_bar * x_inv, 1, span);
    return out;
}

LogValue log_act(const WeylOp& q, long n) {
    if (q.pieces().size() > 1) throw PreconditionError("log action needs a homogeneous operator");
    if (q.is_zero()) return {};
    const ActionPoly& f = q.pieces().begin()->second;
    return {f.derivative().eval(n), f.eval(n)};
}

LogValue log_act(const GradedOp& piece, long n) {
    const long t = floor_div2(n);
    const ActionPoly& f = piece.action(n - 2 * t == 0 ? Parity::Plus : Parity::Minus);
    return {f.derivative().eval(t) * make_rational(1, 2), f.eval(t)};
}

namespace {

Operator random_member(const DunklMode& mode, std::mt19937_64& rng, std::string& label) {
    std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3), sign(0, 1);
    const auto labels = basis_labels(Parity::Plus, 6);
    const auto minus_labels = basis_labels(Parity::Minus, 6);
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    Operator acc(mode);
    const int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        int a = 0;
        while (a == 0) a = coef(rng);
        const BasisLabel& l = sign(rng) ? labels[pick(rng)] : minus_labels[pick(rng)];
        acc += basis_element(l, mode) * CoefPoly(a);
        label += (label.empty() ? "" : " + ") + std::to_string(a) + "*" + l.to_string();
    }
    return acc;
}

}  // namespace

NonMember make_non_member(const DunklMode& mode, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::string label;
    Operator op = random_member(mode, rng, label);
    std::uniform_int_distribution<int> kind(0, 1), coin(0, 1), r_dist(0, 2);
    const Parity par = coin(rng) ? Parity::Plus : Parity::Minus;
    if (kind(rng) == 0) {
        // A scale that no integer combination can absorb.
        static constexpr long primes[] = {2, 3, 5, 7};
        const long q = primes[std::uniform_int_distribution<int>(0, 3)(rng)];
        const int a = std::uniform_int_distribution<int>(0, 4)(rng);
        op += compose(Operator::x_power(mode, a), Operator::e(par, mode)) * CoefPoly(make_rational(1, q));
        label += " + 1/" + std::to_string(q) + "*x^" + std::to_string(a) + "*e" + parity_char(par);
    } else {
        // C(t, m + r) vanishes where needed to fix R[x] but misses the L factor of D_k.
        const unsigned r = static_cast<unsigned>(r_dist(rng));
        const unsigned k = std::uniform_int_distribution<unsigned>(par == Parity::Plus ? 2 : 1, 5)(rng);
        const unsigned m = par == Parity::Plus ? m_delta(1, k) : m_delta(0, k);
        const ActionPoly f = binomial_poly(m + r);
        const int n = -static_cast<int>(k);
        op += par == Parity::Plus ? Operator::piece(mode, n, f, {}) : Operator::piece(mode, n, {}, f);
        label += " + [degree " + std::to_string(n) + (par == Parity::Plus ? " even" : " odd") + " C(t," +
                 std::to_string(m + r) + ")]";
    }
    return {label, op};
}

EquivalenceReport equivalence_report(const std::vector<Rational>& c_values, unsigned degree_bound,
                                     unsigned sample_count, unsigned long seed) {
    EquivalenceReport report;
    for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
        const Rational& c = c_values[ci];
        const DunklMode mode = DunklMode::numeric(c);
        bool failed = false;
        auto record = [&](std::string kind, std::string label, Operator op) {
            EquivalenceRow row{c, std::move(kind), std::move(label), std::move(op)};
            row.in_dp = in_dp(row.op).has_value();
            row.in_hc = in_Hc(row.op);
            failed = failed || !row.agree();
            report.rows.push_back(std::move(row));
        };
        for (Parity sign : {Parity::Plus, Parity::Minus})
            for (auto& [label, op] : basis_enumerate(sign, degree_bound, mode)) record("basis", label.to_string(), op);
        for (unsigned s = 0; s < sample_count; ++s) {
            NonMember nm = make_non_member(mode, seed + 7919 * ci + s);
            record("non-member", std::move(nm.label), std::move(nm.op));
        }
        if (failed && is_integer(c)) report.failing_integer_c.push_back(c);
    }
    return report;
}

}  // namespace cherednik
