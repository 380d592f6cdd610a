#ifndef HOPFGL_EXPRESSION_HPP
#define HOPFGL_EXPRESSION_HPP

#include <string_view>

#include "hopfgl/poly.hpp"

namespace hopfgl
{

// Parse a polynomial over `ring`. Grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer ['/' integer] | identifier | '(' expr ')'
// Identifiers are generator names of the ring ("m1", "b2.L"). Throws
// ParseError with the offending position.
PolyElement parse_polynomial(const Ring &ring, std::string_view text);

} // namespace hopfgl

#endif
