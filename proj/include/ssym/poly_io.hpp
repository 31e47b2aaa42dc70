#pragma once

#include <string>
#include <string_view>

#include "ssym/poly.hpp"

namespace ssym {

/// Canonical text: terms in graded-lex descending order joined by " + ",
/// coefficients printed as residues in [0, p), unit coefficients omitted,
/// factors such as `x1^2*y3*T` joined by '*'. The zero polynomial prints as `0`.
std::string format_poly(const Poly& f);

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' nat)?
///   var    := 'x'nat | 'y'nat | 'T'
/// Whitespace is insignificant; integer coefficients reduce mod p.
/// Throws ParseError on malformed text and RingMismatch when a variable does
/// not exist in `ring`.
Poly parse_poly(std::string_view text, const Ring& ring);

}  // namespace ssym
