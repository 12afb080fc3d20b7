#pragma once

// Text input for curve equations and for canonical forms written over the
// basis labels w(i,j).
//
//   equation := expr ('=' expr)?
//   expr     := term (('+' | '-') term)*
//   term     := ('+' | '-')? factor ('*'? factor)*
//   factor   := base ('^' integer)?
//   base     := 'x' | 'y' | rational | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//
// Whitespace is insignificant. Negative exponents are accepted on monomials.

#include "tamejumps/polynomial.hpp"

#include <map>
#include <string_view>

namespace tamejumps {

/// Parses an equation "L = R" as L - R. Throws ParseError (kParseError,
/// kUnknownVariable) with the byte offset, or Error(kEmptyPolynomial).
BivariatePoly parse_poly(std::string_view source);

/// Parses "2*w(1,1) - 1/3*w(2,1)" or "0" into coefficients by basis index.
/// Zero coefficients are dropped.
std::map<LatticePoint, Rat> parse_form(std::string_view source);

}  // namespace tamejumps
