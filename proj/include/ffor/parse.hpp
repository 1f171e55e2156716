#pragma once

#include <string_view>
#include <vector>

#include "ffor/polynomial.hpp"

namespace ffor {

/// Grammar (whitespace insensitive):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' positive-integer)?
///   atom   := integer | variable | '(' expr ')'
/// Integer coefficients are reduced mod p. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// `[f1, f2, ...]`; `[]` and `[0]` are the zero ideal's generator lists.
std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const RingPtr& ring);

}  // namespace ffor
