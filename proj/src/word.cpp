#include "cherednik/word.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

Word Word::generator(Generator g) {
    Word w;
    w.kind = Kind::Gen;
    w.gen = g;
    return w;
}

Word Word::number(const Rational& value) {
    if (sgn(value) < 0) throw PreconditionError("word literals are nonnegative; use negation");
    Word w;
    w.kind = Kind::Literal;
    w.literal = value;
    w.literal.canonicalize();
    return w;
}

Word Word::param() {
    Word w;
    w.kind = Kind::Param;
    return w;
}

namespace {

Word binary(Word::Kind kind, Word a, Word b) {
    Word w;
    w.kind = kind;
    w.children.push_back(std::move(a));
    w.children.push_back(std::move(b));
    return w;
}

}  // namespace

Word Word::add(Word a, Word b) { return binary(Kind::Add, std::move(a), std::move(b)); }
Word Word::sub(Word a, Word b) { return binary(Kind::Sub, std::move(a), std::move(b)); }
Word Word::mul(Word a, Word b) { return binary(Kind::Mul, std::move(a), std::move(b)); }

Word Word::neg(Word a) {
    Word w;
    w.kind = Kind::Neg;
    w.children.push_back(std::move(a));
    return w;
}

Word Word::pow(Word base, long exponent) {
    Word w;
    w.kind = Kind::Pow;
    w.exponent = exponent;
    w.children.push_back(std::move(base));
    return w;
}

bool operator==(const Word& a, const Word& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Word::Kind::Gen:
            return a.gen == b.gen;
        case Word::Kind::Literal:
            return a.literal == b.literal;
        case Word::Kind::Param:
            return true;
        case Word::Kind::Pow:
            return a.exponent == b.exponent && a.children == b.children;
        default:
            return a.children == b.children;
    }
}

namespace {

Operator generator_op(Generator g, const DunklMode& mode) {
    switch (g) {
        case Generator::X:
            return Operator::x(mode);
        case Generator::Dunkl:
            return Operator::dunkl(mode);
        case Generator::EPlus:
            return Operator::e_plus(mode);
        case Generator::EMinus:
            return Operator::e_minus(mode);
        case Generator::Reflection:
            return Operator::reflection(mode);
    }
    throw PreconditionError("unknown generator");
}

// n when op is exactly x^n.
std::optional<int> pure_x_power(const Operator& op) {
    if (op.pieces().size() != 1) return std::nullopt;
    const auto& [n, p] = *op.pieces().begin();
    if (p.f_plus == ActionPoly(1) && p.f_minus == ActionPoly(1)) return n;
    return std::nullopt;
}

}  // namespace

Operator from_word(const Word& w, const DunklMode& mode) {
    switch (w.kind) {
        case Word::Kind::Gen:
            return generator_op(w.gen, mode);
        case Word::Kind::Literal:
            return Operator::scalar(mode, CoefPoly(w.literal));
        case Word::Kind::Param:
            return Operator::scalar(mode, CoefPoly::parameter());
        case Word::Kind::Add:
            return from_word(w.children[0], mode) + from_word(w.children[1], mode);
        case Word::Kind::Sub:
            return from_word(w.children[0], mode) - from_word(w.children[1], mode);
        case Word::Kind::Mul:
            return compose(from_word(w.children[0], mode), from_word(w.children[1], mode));
        case Word::Kind::Neg:
            return -from_word(w.children[0], mode);
        case Word::Kind::Pow: {
            const Operator base = from_word(w.children[0], mode);
            if (w.exponent >= 0) return power(base, static_cast<unsigned>(w.exponent));
            const auto n = pure_x_power(base);
            if (!n) throw PreconditionError("negative powers are only defined for powers of x");
            return Operator::x_power(mode, static_cast<int>(*n * w.exponent));
        }
    }
    throw PreconditionError("malformed word");
}

std::optional<int> word_degree(const Word& w) {
    switch (w.kind) {
        case Word::Kind::Gen:
            if (w.gen == Generator::X) return 1;
            if (w.gen == Generator::Dunkl) return -1;
            return 0;
        case Word::Kind::Literal:
        case Word::Kind::Param:
            return 0;
        case Word::Kind::Neg:
            return word_degree(w.children[0]);
        case Word::Kind::Pow: {
            auto d = word_degree(w.children[0]);
            if (!d) return std::nullopt;
            return static_cast<int>(*d * w.exponent);
        }
        case Word::Kind::Mul: {
            auto a = word_degree(w.children[0]);
            auto b = word_degree(w.children[1]);
            if (!a || !b) return std::nullopt;
            return *a + *b;
        }
        case Word::Kind::Add:
        case Word::Kind::Sub: {
            auto a = word_degree(w.children[0]);
            auto b = word_degree(w.children[1]);
            if (!a || !b || *a != *b) return std::nullopt;
            return a;
        }
    }
    return std::nullopt;
}

}  // namespace cherednik
