// dpcalc: command-line front end for the divided power Cherednik engine.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition violation.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "cherednik/errors.hpp"
#include "cherednik/json_io.hpp"
#include "cherednik/parser.hpp"
#include "cherednik/verify.hpp"

using namespace cherednik;

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kParseError = 2;
constexpr int kPreconditionViolation = 3;

struct Config {
    std::string c = "symbolic";
    int max_degree = 12;
    std::string format = "text";
    std::optional<unsigned long> prime;

    DunklMode mode() const {
        if (c == "symbolic") return DunklMode::symbolic();
        Rational value;
        if (value.set_str(c, 10) != 0 || value.get_den() == 0)
            throw ParseError("--c expects 'symbolic' or a rational number, got \"" + c + "\"", 0, {"symbolic", "number"});
        value.canonicalize();
        return DunklMode::numeric(value);
    }
    bool json() const { return format == "json"; }
};

// Exit status carried out of a command without throwing.
struct Outcome {
    Json result;
    std::string text;
    int status = 0;
};

std::string read_expression(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

Operator operator_arg(const std::string& arg, const DunklMode& mode) { return from_word(parse(read_expression(arg)), mode); }

Parity parity_arg(const std::string& s) {
    if (s == "+") return Parity::Plus;
    if (s == "-") return Parity::Minus;
    throw PreconditionError("sign must be '+' or '-', got \"" + s + "\"");
}

std::vector<Parity> signs_arg(const std::string& s) {
    if (s == "both") return {Parity::Plus, Parity::Minus};
    return {parity_arg(s)};
}

Outcome cmd_normalize(const Config& cfg, const std::string& expr) {
    const Operator q = operator_arg(expr, cfg.mode());
    return {to_json(q), q.to_string()};
}

Outcome cmd_act(const Config& cfg, const std::string& expr, long from, long to) {
    const Operator q = operator_arg(expr, cfg.mode());
    if (from > to) throw PreconditionError("--from must not exceed --to");
    if (cfg.prime) {
        const ModPTable table = reduce_mod_p(q, *cfg.prime, to);
        std::ostringstream os;
        os << "mod " << table.prime << '\n';
        for (const auto& row : table.rows) {
            if (row.exponent < from) continue;
            os << "x^" << row.exponent << " ->";
            if (row.image.empty()) os << " 0";
            for (const auto& [e, r] : row.image) os << ' ' << r << "*x^" << e;
            os << '\n';
        }
        Json j = to_json(table);
        Json rows = Json::array();
        for (auto& r : j["rows"])
            if (r["exponent"].get<long>() >= from) rows.push_back(r);
        j["rows"] = rows;
        return {j, os.str()};
    }
    Json rows = Json::array();
    std::ostringstream os;
    for (long k = from; k <= to; ++k) {
        const LaurentPoly image = act(q, k);
        os << "x^" << k << " -> " << laurent_to_string(image) << '\n';
        rows.push_back({{"exponent", k}, {"image", to_json(image)}});
    }
    return {rows, os.str()};
}

Outcome cmd_divisor(const Config& cfg, const std::string& expr) {
    const Integer d = operator_divisor(operator_arg(expr, cfg.mode()));
    return {d.get_str(), d.get_str()};
}

Outcome cmd_member(const Config& cfg, const std::string& expr) {
    const DpVerdict v = dp_verdict(operator_arg(expr, cfg.mode()));
    std::string text = v.witness ? "member: denominator " + v.witness->denominator.get_str() : "refusal: " + v.reason;
    return {to_json(v), text};
}

Outcome cmd_basis(const Config& cfg, const std::string& sign) {
    Json rows = Json::array();
    std::ostringstream os;
    for (Parity p : signs_arg(sign))
        for (const auto& [label, op] : basis_enumerate(p, static_cast<unsigned>(cfg.max_degree), cfg.mode())) {
            os << label.to_string() << " [degree " << label.total_degree() << "]: " << op.to_string() << '\n';
            rows.push_back({{"label", label.to_string()}, {"total_degree", label.total_degree()}, {"operator", to_json(op)}});
        }
    return {rows, os.str()};
}

Outcome cmd_decompose(const Config& cfg, const std::string& expr) {
    const auto coords = decompose_in_basis(operator_arg(expr, cfg.mode()));
    std::ostringstream os;
    if (coords.empty()) os << "0\n";
    for (const auto& [label, a] : coords) os << label.to_string() << ": " << a.to_string() << '\n';
    return {to_json(coords), os.str()};
}

Outcome cmd_hilbert(const Config& cfg) {
    Json rows = Json::array();
    std::string dims;
    int status = 0;
    for (unsigned m = 0; m <= static_cast<unsigned>(cfg.max_degree); ++m) {
        const unsigned d = graded_dimension(m);
        const unsigned expected = 2 * (m + 1);
        if (d != expected) status = kVerificationFailure;
        rows.push_back({{"degree", m}, {"dimension", d}, {"expected", expected}});
        dims += (m ? "," : "") + std::to_string(d);
    }
    return {rows, dims + (status ? "\nmismatch against 2(m+1)\n" : "\n"), status};
}

Outcome cmd_sl2(const Config& cfg, unsigned sigma_degree) {
    const DunklMode mode = cfg.mode();
    const Sl2Triple t = build_triple(mode);
    const Operator residual = casimir(mode) - Operator::e_plus(mode) * casimir_scalar(mode);
    const bool he = commutator(t.h, t.e) == t.e * CoefPoly(2);
    const bool hf = commutator(t.h, t.f) == t.f * CoefPoly(-2);
    const bool ef = commutator(t.e, t.f) == t.h;
    Json table = Json::array();
    std::ostringstream os;
    os << "E = " << t.e.to_string() << "\nH = " << t.h.to_string() << "\nF = " << t.f.to_string() << '\n';
    os << "[H,E] = 2E: " << (he ? "yes" : "no") << "\n[H,F] = -2F: " << (hf ? "yes" : "no")
       << "\n[E,F] = H: " << (ef ? "yes" : "no") << '\n';
    os << "Casimir scalar: " << casimir_scalar(mode).to_string() << " (" << (residual.is_zero() ? "exact" : "MISMATCH")
       << ")\n";
    bool sigma_ok = true;
    for (unsigned a = 0; a <= sigma_degree; ++a)
        for (unsigned b = 0; a + b <= sigma_degree; ++b)
            for (unsigned k = 0; a + b + k <= sigma_degree; ++k) {
                if (a > 0 && b > 0) continue;
                const BasisLabel label = sigma_label(a, b, k);
                const bool eq = sigma(a, b, k, mode) == basis_element(label, mode);
                sigma_ok = sigma_ok && eq;
                table.push_back({{"a", a}, {"b", b}, {"k", k}, {"label", label.to_string()}, {"equal", eq}});
                os << "Sigma(" << a << ',' << b << ',' << k << ") = " << label.to_string() << ": " << (eq ? "yes" : "no")
                   << '\n';
            }
    Json j = {{"E", to_json(t.e)},
              {"H", to_json(t.h)},
              {"F", to_json(t.f)},
              {"brackets", {{"HE", he}, {"HF", hf}, {"EF", ef}}},
              {"casimir_scalar", to_json(casimir_scalar(mode))},
              {"casimir_exact", residual.is_zero()},
              {"sigma_table", table}};
    const bool all = he && hf && ef && residual.is_zero() && sigma_ok;
    return {j, os.str(), all ? 0 : kVerificationFailure};
}

Outcome cmd_abstract(const Config& cfg, const std::vector<std::string>& c_values, unsigned samples) {
    std::vector<Rational> cs;
    for (const auto& s : c_values) {
        Rational q;
        if (q.set_str(s, 10) != 0 || q.get_den() == 0)
            throw ParseError("--c-values expects rationals, got \"" + s + "\"", 0, {"number"});
        q.canonicalize();
        cs.push_back(q);
    }
    const EquivalenceReport report = equivalence_report(cs, static_cast<unsigned>(cfg.max_degree), samples);
    std::ostringstream os;
    for (const auto& c : cs) {
        std::size_t rows = 0, agree = 0;
        for (const auto& r : report.rows)
            if (r.c == c) {
                ++rows;
                agree += r.agree();
            }
        os << "c = " << to_string(c) << ": " << agree << "/" << rows << " agree"
           << (is_integer(c) ? "" : " (exploration, not asserted)") << '\n';
    }
    for (const auto& r : report.rows)
        if (!r.agree())
            os << "  disagreement at c = " << to_string(r.c) << ": " << r.operator_label << " in_dp=" << r.in_dp
               << " in_Hc=" << r.in_hc << '\n';
    return {to_json(report), os.str(), report.ok() ? 0 : kVerificationFailure};
}

Outcome cmd_lattice(const Config& cfg, const std::string& sign, int degree) {
    const IntLattice lat = int_basis(parity_arg(sign), degree, cfg.mode(), cfg.max_degree);
    std::ostringstream os;
    for (const auto& g : lat.generators) os << g.to_string() << '\n';
    return {to_json(lat), os.str()};
}

Outcome cmd_verify(const std::vector<std::string>& only, const std::vector<std::string>& negate, bool list,
                   unsigned threads) {
    std::vector<Check> checks;
    for (auto& c : invariant_checks())
        if (only.empty() || std::find(only.begin(), only.end(), c.name) != only.end()) checks.push_back(std::move(c));
    for (const auto& n : only)
        if (std::none_of(checks.begin(), checks.end(), [&](const Check& c) { return c.name == n; }))
            throw PreconditionError("unknown check \"" + n + "\"");
    if (list) {
        Json names = Json::array();
        std::string text;
        for (const auto& c : checks) {
            names.push_back(c.name);
            text += c.name + '\n';
        }
        return {names, text};
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const auto results = run_checks(checks, threads, {negate.begin(), negate.end()});
    Json rows = Json::array();
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : results) {
        failed += !r.passed;
        os << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
        rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    os << results.size() - failed << "/" << results.size() << " checks passed\n";
    return {rows, os.str(), failed ? kVerificationFailure : 0};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dpcalc: divided powers of the type A1 rational Cherednik algebra"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--c", cfg.c, "Parameter c: 'symbolic' or a number such as 2 or 1/2")->capture_default_str();
    app.add_option("--max-degree", cfg.max_degree, "Degree bound for enumerations")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--prime", cfg.prime, "Prime for mod-p action tables");

    std::string expr, sign = "both", lattice_sign = "+";
    long from = 0;
    std::optional<long> to;
    int degree = -1;
    unsigned sigma_degree = 4, samples = 50, threads = 0;
    std::optional<int> abstract_degree;
    std::vector<std::string> c_values = {"-3", "-1", "0", "1", "2", "1/2"};
    std::vector<std::string> only, negate;
    bool list = false;

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
    normalize->add_option("expr", expr, "Operator expression ('-' reads stdin)")->required();
    auto* act_cmd = app.add_subcommand("act", "Images of x^k for k in a range");
    act_cmd->add_option("expr", expr)->required();
    act_cmd->add_option("--from", from, "First exponent")->capture_default_str();
    act_cmd->add_option("--to", to, "Last exponent (default: --max-degree)");
    auto* divisor = app.add_subcommand("divisor", "Largest integer dividing the operator");
    divisor->add_option("expr", expr)->required();
    auto* member = app.add_subcommand("member", "Divided power membership with witness or refusal");
    member->add_option("expr", expr)->required();
    auto* basis = app.add_subcommand("basis", "Enumerate the Delta basis up to --max-degree");
    basis->add_option("--sign", sign, "+, - or both")->check(CLI::IsMember({"+", "-", "both"}))->capture_default_str();
    auto* decompose = app.add_subcommand("decompose", "Coordinates in the Delta basis");
    decompose->add_option("expr", expr)->required();
    app.add_subcommand("hilbert", "Graded dimensions against 2(m+1)");
    auto* sl2 = app.add_subcommand("sl2", "sl2 triple, Casimir and the Sigma/Delta table");
    sl2->add_option("--sigma-degree", sigma_degree, "Bound on a+b+k")->capture_default_str();
    auto* abstract = app.add_subcommand("abstract", "Equivalence report between in_dp and in_Hc");
    abstract->add_option("--c-values", c_values, "Values of c")->delimiter(',')->capture_default_str();
    abstract->add_option("--samples", samples, "Non-members per value of c")->capture_default_str();
    abstract->add_option("--degree", abstract_degree, "Basis degree bound (default 8)");
    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--only", only, "Run only the named checks");
    verify->add_option("--negate", negate, "Flip the outcome of the named checks");
    verify->add_flag("--list", list, "List check names");
    verify->add_option("--threads", threads, "Worker threads (0: hardware)")->capture_default_str();
    auto* lattice = app.add_subcommand("lattice", "Basis of the integer-valued lattice of one graded piece");
    lattice->add_option("--sign", lattice_sign)->check(CLI::IsMember({"+", "-"}))->capture_default_str();
    lattice->add_option("--degree", degree, "Graded degree n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (cfg.prime && !is_prime(*cfg.prime))
            throw PreconditionError("--prime " + std::to_string(*cfg.prime) + " is not prime");
        Outcome out;
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "normalize") out = cmd_normalize(cfg, expr);
        else if (name == "act") out = cmd_act(cfg, expr, from, to.value_or(cfg.max_degree));
        else if (name == "divisor") out = cmd_divisor(cfg, expr);
        else if (name == "member") out = cmd_member(cfg, expr);
        else if (name == "basis") out = cmd_basis(cfg, sign);
        else if (name == "decompose") out = cmd_decompose(cfg, expr);
        else if (name == "hilbert") out = cmd_hilbert(cfg);
        else if (name == "sl2") out = cmd_sl2(cfg, sigma_degree);
        else if (name == "abstract") {
            Config local = cfg;
            local.max_degree = abstract_degree.value_or(8);
            out = cmd_abstract(local, c_values, samples);
        } else if (name == "verify") out = cmd_verify(only, negate, list, threads);
        else out = cmd_lattice(cfg, lattice_sign, degree);

        if (cfg.json()) {
            Json envelope = {{"command", name}};
            envelope["config"] = to_json(cfg.mode());
            envelope["config"]["max_degree"] = cfg.max_degree;
            if (cfg.prime) envelope["config"]["prime"] = *cfg.prime;
            envelope["result"] = std::move(out.result);
            std::cout << envelope.dump(2) << '\n';
        } else {
            std::cout << out.text;
            if (!out.text.empty() && out.text.back() != '\n') std::cout << '\n';
        }
        return out.status;
    } catch (const ParseError& e) {
        std::cerr << "dpcalc: " << e.what() << '\n';
        return kParseError;
    } catch (const Error& e) {
        std::cerr << "dpcalc: " << e.what() << '\n';
        return kPreconditionViolation;
    }
}
