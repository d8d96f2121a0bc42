#include <doctest.h>

#include "cherednik/errors.hpp"
#include "cherednik/parser.hpp"
#include "cherednik/sl2.hpp"
#include "support.hpp"

using namespace cherednik;

namespace {
Word gen(Generator g) { return Word::generator(g); }

Word random_ast(oracle::Rng& rng, int depth) {
    if (depth == 0 || oracle::uniform(rng, 0, 3) == 0) {
        switch (oracle::uniform(rng, 0, 7)) {
            case 0: return gen(Generator::X);
            case 1: return gen(Generator::Dunkl);
            case 2: return gen(Generator::EPlus);
            case 3: return gen(Generator::EMinus);
            case 4: return gen(Generator::Reflection);
            case 5: return Word::param();
            case 6: return Word::number(oracle::q(oracle::uniform(rng, 1, 9), oracle::uniform(rng, 2, 5)));
            default: return Word::number(oracle::uniform(rng, 0, 20));
        }
    }
    switch (oracle::uniform(rng, 0, 4)) {
        case 0: return Word::add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 1: return Word::sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 2: return Word::mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 3: return Word::neg(random_ast(rng, depth - 1));
        default: return Word::pow(random_ast(rng, depth - 1), oracle::uniform(rng, 0, 4));
    }
}
}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("parse examples") {
        const Word comm = parse("D*x - x*D");
        CHECK(comm == Word::sub(Word::mul(gen(Generator::Dunkl), gen(Generator::X)),
                                Word::mul(gen(Generator::X), gen(Generator::Dunkl))));
        const Word f = parse("1/2 * D^2 * e+");
        CHECK(f == Word::mul(Word::mul(Word::number(oracle::q(1, 2)), Word::pow(gen(Generator::Dunkl), 2)),
                             gen(Generator::EPlus)));
        CHECK(from_word(f, DunklMode::symbolic()) == build_triple().f);
        CHECK(parse("  x ^ -2 ") == Word::pow(gen(Generator::X), -2));
        CHECK(parse("-x^2") == Word::neg(Word::pow(gen(Generator::X), 2)));
        CHECK(parse("x - D + s") ==
              Word::add(Word::sub(gen(Generator::X), gen(Generator::Dunkl)), gen(Generator::Reflection)));
    }

    TEST_CASE("parse errors carry offsets") {
        try {
            parse("e+ e-");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 3);
            CHECK_FALSE(e.expected().empty());
        }
        for (const char* bad : {"", "x*", "(x", "x)", "e", "1/0", "x^", "2c", "y"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse(bad), ParseError);
        }
        try {
            parse("x + (D * )");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 9);
        }
    }

    TEST_CASE("parse_poly") {
        const ActionPoly t = ActionPoly::variable();
        CHECK(parse_poly("2*t - 1 - 2*c") == ActionPoly::affine(2, CoefPoly(-1) - oracle::c() * oracle::q(2)));
        CHECK(parse_poly("t^2 + t") == t * t + t);
        CHECK_THROWS_AS(parse_poly("x"), ParseError);
    }

    TEST_CASE("property: parse . print . parse is the identity on 200 random ASTs") {
        oracle::Rng rng(41);
        for (int i = 0; i < 200; ++i) {
            const Word w = random_ast(rng, static_cast<int>(oracle::uniform(rng, 0, 6)));
            const std::string text = print(w);
            CAPTURE(text);
            const Word back = parse(text);
            CHECK(back == w);
            CHECK(parse(print(back)) == back);
        }
    }
}
