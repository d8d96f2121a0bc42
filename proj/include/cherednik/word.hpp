#pragma once

#include <optional>
#include <vector>

#include "cherednik/operator.hpp"

namespace cherednik {

enum class Generator { X, Dunkl, EPlus, EMinus, Reflection };

// Noncommutative expression over x, D, e+, e-, s, rational literals and c.
// Literals are nonnegative; signs are carried by Neg/Sub nodes.
struct Word {
    enum class Kind { Gen, Literal, Param, Add, Sub, Mul, Neg, Pow };

    Kind kind = Kind::Literal;
    Generator gen = Generator::X;
    Rational literal = 0;
    long exponent = 0;
    std::vector<Word> children;

    static Word generator(Generator g);
    static Word number(const Rational& value);
    static Word param();
    static Word add(Word a, Word b);
    static Word sub(Word a, Word b);
    static Word mul(Word a, Word b);
    static Word neg(Word a);
    static Word pow(Word base, long exponent);

    friend bool operator==(const Word& a, const Word& b);
};

// Evaluates the word in normal form. Negative powers are only defined for
// pure powers of x.
Operator from_word(const Word& w, const DunklMode& mode);

// Degree of a homogeneous word (x -> 1, D -> -1, everything else 0);
// nullopt when a sum mixes degrees.
std::optional<int> word_degree(const Word& w);

}  // namespace cherednik
