#include "cherednik/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

enum class Tok { Int, Slash, Plus, Minus, Star, Caret, LParen, RParen, Ident, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

[[noreturn]] void fail(const Token& at, std::vector<std::string> expected) {
    std::ostringstream os;
    os << "parse error at offset " << at.offset << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << "; found " << describe(at);
    throw ParseError(os.str(), at.offset, std::move(expected));
}

// With allow_idempotents, "e+" and "e-" lex as single identifiers.
std::vector<Token> lex(std::string_view s, bool allow_idempotents) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
            continue;
        }
        switch (ch) {
            case '/': out.push_back({Tok::Slash, "/", i++}); continue;
            case '+': out.push_back({Tok::Plus, "+", i++}); continue;
            case '-': out.push_back({Tok::Minus, "-", i++}); continue;
            case '*': out.push_back({Tok::Star, "*", i++}); continue;
            case '^': out.push_back({Tok::Caret, "^", i++}); continue;
            case '(': out.push_back({Tok::LParen, "(", i++}); continue;
            case ')': out.push_back({Tok::RParen, ")", i++}); continue;
            default: break;
        }
        if (allow_idempotents && ch == 'e' && i + 1 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-')) {
            out.push_back({Tok::Ident, std::string(s.substr(i, 2)), i});
            i += 2;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            out.push_back({Tok::Ident, std::string(1, ch), i++});
            continue;
        }
        fail(Token{Tok::Ident, std::string(1, ch), start}, {"a token"});
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

long parse_long(const Token& t) {
    try {
        std::size_t used = 0;
        const long v = std::stol(t.text, &used);
        if (used == t.text.size()) return v;
    } catch (const std::exception&) {
    }
    fail(t, {"an exponent that fits in a machine integer"});
}

// Shared recursive-descent driver; Builder supplies atoms and node
// constructors for either Words or ActionPolys.
template <typename Builder>
class Parser {
public:
    using Node = typename Builder::Node;

    Parser(std::vector<Token> toks, Builder b) : toks_(std::move(toks)), b_(std::move(b)) {}

    Node parse_all() {
        Node n = expr();
        if (peek().kind != Tok::End) fail(peek(), {"'+'", "'-'", "'*'", "'^'", "end of input"});
        return n;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    Node expr() {
        Node acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool plus = next().kind == Tok::Plus;
            Node rhs = term();
            acc = plus ? b_.add(std::move(acc), std::move(rhs)) : b_.sub(std::move(acc), std::move(rhs));
        }
        return acc;
    }

    Node term() {
        Node acc = unary();
        while (peek().kind == Tok::Star) {
            next();
            acc = b_.mul(std::move(acc), unary());
        }
        return acc;
    }

    Node unary() {
        if (peek().kind == Tok::Minus) {
            next();
            return b_.neg(unary());
        }
        return power();
    }

    Node power() {
        Node base = atom();
        if (peek().kind != Tok::Caret) return base;
        next();
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            negative = true;
            next();
        }
        if (peek().kind != Tok::Int) fail(peek(), {"integer exponent"});
        long e = parse_long(next());
        return b_.pow(std::move(base), negative ? -e : e, toks_[pos_ - 1]);
    }

    Node atom() {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            next();
            Integer num(t.text);
            Integer den = 1;
            if (peek().kind == Tok::Slash) {
                next();
                if (peek().kind != Tok::Int) fail(peek(), {"integer denominator"});
                const Token& d = next();
                den = Integer(d.text);
                if (den == 0) fail(d, {"nonzero denominator"});
            }
            return b_.number(make_rational(num, den));
        }
        if (t.kind == Tok::LParen) {
            next();
            Node inner = expr();
            if (peek().kind != Tok::RParen) fail(peek(), {"')'", "'+'", "'-'", "'*'", "'^'"});
            next();
            return inner;
        }
        if (t.kind == Tok::Ident) {
            if (auto n = b_.ident(t.text)) {
                next();
                return std::move(*n);
            }
        }
        fail(t, b_.atom_names());
    }

    std::vector<Token> toks_;
    Builder b_;
    std::size_t pos_ = 0;
};

struct WordBuilder {
    using Node = Word;
    Node number(const Rational& q) { return Word::number(q); }
    Node add(Node a, Node b) { return Word::add(std::move(a), std::move(b)); }
    Node sub(Node a, Node b) { return Word::sub(std::move(a), std::move(b)); }
    Node mul(Node a, Node b) { return Word::mul(std::move(a), std::move(b)); }
    Node neg(Node a) { return Word::neg(std::move(a)); }
    Node pow(Node a, long e, const Token&) { return Word::pow(std::move(a), e); }
    std::optional<Node> ident(const std::string& s) {
        if (s == "x") return Word::generator(Generator::X);
        if (s == "D") return Word::generator(Generator::Dunkl);
        if (s == "e+") return Word::generator(Generator::EPlus);
        if (s == "e-") return Word::generator(Generator::EMinus);
        if (s == "s") return Word::generator(Generator::Reflection);
        if (s == "c") return Word::param();
        return std::nullopt;
    }
    std::vector<std::string> atom_names() const {
        return {"number", "'c'", "'x'", "'D'", "'e+'", "'e-'", "'s'", "'('", "'-'"};
    }
};

struct PolyBuilder {
    using Node = ActionPoly;
    Node number(const Rational& q) { return ActionPoly(q); }
    Node add(Node a, Node b) { return a + b; }
    Node sub(Node a, Node b) { return a - b; }
    Node mul(Node a, Node b) { return a * b; }
    Node neg(Node a) { return -a; }
    Node pow(Node a, long e, const Token& at) {
        if (e < 0) fail(at, {"nonnegative exponent"});
        ActionPoly acc(1);
        for (long i = 0; i < e; ++i) acc = acc * a;
        return acc;
    }
    std::optional<Node> ident(const std::string& s) {
        if (s == "t") return ActionPoly::variable();
        if (s == "c") return ActionPoly(CoefPoly::parameter());
        return std::nullopt;
    }
    std::vector<std::string> atom_names() const { return {"number", "'c'", "'t'", "'('", "'-'"}; }
};

// Binding strength of the node's outermost operator.
int precedence(const Word& w) {
    switch (w.kind) {
        case Word::Kind::Add:
        case Word::Kind::Sub:
            return 1;
        case Word::Kind::Mul:
            return 2;
        case Word::Kind::Neg:
            return 3;
        case Word::Kind::Pow:
            return 4;
        default:
            return 5;
    }
}

void print_into(std::string& out, const Word& w, int min_prec) {
    const bool paren = precedence(w) < min_prec;
    if (paren) out += '(';
    switch (w.kind) {
        case Word::Kind::Gen:
            switch (w.gen) {
                case Generator::X: out += 'x'; break;
                case Generator::Dunkl: out += 'D'; break;
                case Generator::EPlus: out += "e+"; break;
                case Generator::EMinus: out += "e-"; break;
                case Generator::Reflection: out += 's'; break;
            }
            break;
        case Word::Kind::Literal:
            out += w.literal.get_str();
            break;
        case Word::Kind::Param:
            out += 'c';
            break;
        case Word::Kind::Add:
        case Word::Kind::Sub:
            print_into(out, w.children[0], 1);
            out += w.kind == Word::Kind::Add ? " + " : " - ";
            print_into(out, w.children[1], 2);
            break;
        case Word::Kind::Mul:
            print_into(out, w.children[0], 2);
            out += '*';
            print_into(out, w.children[1], 3);
            break;
        case Word::Kind::Neg:
            out += '-';
            print_into(out, w.children[0], 3);
            break;
        case Word::Kind::Pow:
            print_into(out, w.children[0], 5);
            out += '^';
            out += std::to_string(w.exponent);
            break;
    }
    if (paren) out += ')';
}

}  // namespace

Word parse(std::string_view input) {
    return Parser<WordBuilder>(lex(input, true), WordBuilder{}).parse_all();
}

std::string print(const Word& w) {
    std::string out;
    print_into(out, w, 0);
    return out;
}

ActionPoly parse_poly(std::string_view input) {
    return Parser<PolyBuilder>(lex(input, false), PolyBuilder{}).parse_all();
}

}  // namespace cherednik
