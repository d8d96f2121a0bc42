#include "cherednik/intval.hpp"

#include <algorithm>
#include <utility>

#include "cherednik/errors.hpp"

namespace cherednik {

char parity_char(Parity p) { return p == Parity::Plus ? '+' : '-'; }

const Rational& DunklMode::c_value() const {
    if (!value_) throw PreconditionError("symbolic mode has no numeric value of c");
    return *value_;
}

CoefPoly DunklMode::parameter() const { return value_ ? CoefPoly(*value_) : CoefPoly::parameter(); }

ActionPoly DunklMode::apply(const ActionPoly& f) const { return value_ ? f.specialize_c(*value_) : f; }

CoefPoly DunklMode::apply(const CoefPoly& f) const { return value_ ? CoefPoly(f.eval(*value_)) : f; }

std::string DunklMode::to_string() const { return value_ ? "c=" + value_->get_str() : "symbolic"; }

unsigned m_delta(unsigned delta, unsigned k) { return (k + delta) / 2; }

namespace {

// a*t + b - 2c*(coefficient of c)
ActionPoly linear_factor(long t_coeff, long constant, long c_multiple, const DunklMode& mode) {
    CoefPoly b = CoefPoly(constant) + mode.parameter() * Rational(c_multiple);
    return ActionPoly::affine(t_coeff, b);
}

}  // namespace

ActionPoly dunkl_poly(Parity parity, unsigned k, const DunklMode& mode) {
    std::vector<ActionPoly> factors;
    factors.reserve(k);
    for (unsigned i = 0; i < k; ++i) {
        const long il = static_cast<long>(i);
        if (parity == Parity::Plus) {
            const long p = il % 2;
            factors.push_back(linear_factor(2, -il, -2 * p, mode));
        } else {
            const long p = (il + 1) % 2;
            factors.push_back(linear_factor(2, 1 - il, -2 * p, mode));
        }
    }
    return falling_product(factors);
}

ActionPoly l_poly(Parity parity, unsigned k, const DunklMode& mode) {
    std::vector<ActionPoly> factors;
    if (parity == Parity::Plus) {
        for (long i = 0; i < static_cast<long>(m_delta(0, k)); ++i) factors.push_back(linear_factor(2, -2 * i - 1, -2, mode));
    } else {
        for (long i = 0; i < static_cast<long>(m_delta(1, k)); ++i) factors.push_back(linear_factor(2, -2 * i + 1, -2, mode));
    }
    return falling_product(factors);
}

bool is_r_valued(const ActionPoly& f, const DunklMode& mode) {
    const auto newton = to_newton(mode.apply(f));
    return std::all_of(newton.begin(), newton.end(), [](const CoefPoly& a) { return a.is_integral(); });
}

Integer divisor_of_values(const ActionPoly& f, const DunklMode& mode) {
    const ActionPoly g = mode.apply(f);
    Integer d = 0;
    for (const auto& alpha : to_newton(g)) {
        if (!alpha.is_integral()) {
            for (long n = 0; n <= g.degree(); ++n) {
                if (!g.eval(n).is_integral())
                    throw NonIntegralValues("value at t=" + std::to_string(n) + " is " + g.eval(n).to_string() +
                                            ", not in R");
            }
            throw NonIntegralValues("non-integral Newton coefficient " + alpha.to_string());
        }
        d = gcd(d, alpha.content());
    }
    return d;
}

// ------------------------------------------------------------------ lattices

namespace {

void row_axpy(std::vector<Integer>& dst, const Integer& q, const std::vector<Integer>& src) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

// HNF with a companion matrix receiving the same row operations.
// Returns the rank; rows [0, rank) of `a` hold the echelon part.
std::size_t echelonize(IntMatrix& a, IntMatrix* companion) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][col] != 0 && (best == rows || abs(a[i][col]) < abs(a[best][col]))) best = i;
            if (best == rows) break;
            std::swap(a[r], a[best]);
            if (companion) std::swap((*companion)[r], (*companion)[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
                row_axpy(a[i], q, a[r]);
                if (companion) row_axpy((*companion)[i], q, (*companion)[r]);
                if (a[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (r >= rows || a[r][col] == 0) continue;
        if (a[r][col] < 0) {
            for (auto& v : a[r]) v = -v;
            if (companion)
                for (auto& v : (*companion)[r]) v = -v;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
            if (q == 0) continue;
            row_axpy(a[i], q, a[r]);
            if (companion) row_axpy((*companion)[i], q, (*companion)[r]);
        }
        ++r;
    }
    return r;
}

IntMatrix transpose(const IntMatrix& m, std::size_t cols) {
    IntMatrix t(cols, std::vector<Integer>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

// Z-basis of { w in Z^p : w * m = 0 } for a p x q matrix m.
IntMatrix left_kernel(IntMatrix m, std::size_t p) {
    IntMatrix u(p, std::vector<Integer>(p));
    for (std::size_t i = 0; i < p; ++i) u[i][i] = 1;
    if (m.empty() || m[0].empty()) return u;
    const std::size_t rank = echelonize(m, &u);
    return IntMatrix(u.begin() + static_cast<std::ptrdiff_t>(rank), u.end());
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    const std::size_t rank = echelonize(rows, nullptr);
    rows.resize(rank);
    return rows;
}

IntMatrix saturate(const IntMatrix& rows) {
    if (rows.empty()) throw PreconditionError("saturate needs at least one row");
    const std::size_t m = rows[0].size();
    // Kernel of the row map, then everything orthogonal to that kernel.
    const IntMatrix kernel = left_kernel(transpose(rows, m), m);
    IntMatrix orth = left_kernel(transpose(kernel, m), m);
    if (kernel.empty()) {
        orth.assign(m, std::vector<Integer>(m));
        for (std::size_t i = 0; i < m; ++i) orth[i][i] = 1;
    }
    return hermite_normal_form(std::move(orth));
}

IntLattice specialized_symbolic_basis(Parity parity, int n, const Rational& c, int max_t_degree) {
    IntLattice sym = int_basis(parity, n, DunklMode::symbolic(), max_t_degree);
    sym.mode = DunklMode::numeric(c);
    for (auto& g : sym.generators) g = g.specialize_c(c);
    return sym;
}

IntLattice int_basis(Parity parity, int n, const DunklMode& mode, int max_t_degree) {
    const int shift = n < 0 ? -n : 0;
    if (max_t_degree < shift)
        throw PreconditionError("truncation " + std::to_string(max_t_degree) + " below minimum degree " +
                                std::to_string(shift));
    IntLattice lattice{parity, n, mode, max_t_degree, {}};

    if (mode.is_symbolic()) {
        if (n >= 0) {
            for (int k = 0; k <= max_t_degree; ++k) lattice.generators.push_back(binomial_poly(static_cast<unsigned>(k)));
        } else {
            const unsigned k1 = static_cast<unsigned>(-n);
            const unsigned m = parity == Parity::Plus ? m_delta(1, k1) : m_delta(0, k1);
            const ActionPoly l = l_poly(parity, k1, mode);
            for (int k = 0; k + shift <= max_t_degree; ++k)
                lattice.generators.push_back(l * binomial_poly(m + static_cast<unsigned>(k)));
        }
        return lattice;
    }

    const ActionPoly base = n < 0 ? dunkl_poly(parity, static_cast<unsigned>(-n), mode) : ActionPoly(1);
    const std::size_t width = static_cast<std::size_t>(max_t_degree) + 1;
    IntMatrix rows;
    ActionPoly power(1);
    const ActionPoly two_t = ActionPoly::affine(2, 0);
    for (int j = 0; j + shift <= max_t_degree; ++j) {
        const auto newton = to_newton(base * power);
        // Columns reversed so the Hermite pivots sit at the top Newton index.
        std::vector<Integer> row(width);
        for (std::size_t i = 0; i < newton.size(); ++i) {
            const Rational v = newton[i].constant_term();
            if (!is_integer(v) || !newton[i].is_constant())
                throw NonIntegralValues("Dunkl polynomial is not integer valued at c=" + mode.c_value().get_str());
            row[width - 1 - i] = v.get_num();
        }
        rows.push_back(std::move(row));
        power = power * two_t;
    }
    const IntMatrix sat = saturate(rows);
    for (auto it = sat.rbegin(); it != sat.rend(); ++it) {
        std::vector<CoefPoly> newton(width);
        for (std::size_t i = 0; i < width; ++i) newton[i] = CoefPoly(Rational((*it)[width - 1 - i]));
        lattice.generators.push_back(from_newton(newton));
    }
    return lattice;
}

std::optional<std::vector<CoefPoly>> triangular_coordinates(const std::vector<ActionPoly>& generators,
                                                            const ActionPoly& target) {
    std::vector<std::vector<CoefPoly>> gen_newton;
    gen_newton.reserve(generators.size());
    for (const auto& g : generators) gen_newton.push_back(to_newton(g));
    auto rest = to_newton(target);
    std::vector<CoefPoly> coords(generators.size());
    for (std::size_t idx = generators.size(); idx-- > 0;) {
        const auto& g = gen_newton[idx];
        if (g.empty()) throw PreconditionError("zero generator in triangular solve");
        const std::size_t top = g.size() - 1;
        if (!g[top].is_constant()) throw PreconditionError("generator leading coefficient depends on c");
        if (top >= rest.size() || rest[top].is_zero()) continue;
        const CoefPoly coef = rest[top] / g[top].constant_term();
        for (std::size_t i = 0; i <= top; ++i) rest[i] -= coef * g[i];
        coords[idx] = coef;
    }
    for (const auto& r : rest)
        if (!r.is_zero()) return std::nullopt;
    return coords;
}

bool lattice_contains(const IntLattice& lattice, const ActionPoly& target) {
    if (target.degree() > lattice.truncation) return false;
    const auto coords = triangular_coordinates(lattice.generators, lattice.mode.apply(target));
    if (!coords) return false;
    return std::all_of(coords->begin(), coords->end(), [](const CoefPoly& a) { return a.is_integral(); });
}

}  // namespace cherednik
