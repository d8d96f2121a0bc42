#pragma once

// Operator expression grammar (LL(1), whitespace insignificant):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' '-'? INT)?
//   atom   := INT ('/' INT)? | 'c' | 'x' | 'D' | 'e+' | 'e-' | 's' | '(' expr ')'
//
// '*' is noncommutative composition and is never implicit.

#include <string>
#include <string_view>

#include "cherednik/poly.hpp"
#include "cherednik/word.hpp"

namespace cherednik {

// Throws ParseError carrying the byte offset and the expected-token set.
Word parse(std::string_view input);

// Minimal-parenthesis rendering; parse(print(w)) == w.
std::string print(const Word& w);

// Same grammar with atoms INT ('/' INT)?, 'c', 't'; commutative.
ActionPoly parse_poly(std::string_view input);

}  // namespace cherednik
