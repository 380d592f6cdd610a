#ifndef HOPFGL_RATIONAL_HPP
#define HOPFGL_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hopfgl/error.hpp"

namespace hopfgl
{

// Arbitrary precision rational, always kept canonical (lowest terms, positive
// denominator, zero as 0/1).
using Rational = mpq_class;

// Canonical "p/q" form; integers keep the "/1".
std::string to_string(const Rational &q);

// Compact form for human output: "3", "-1/2".
std::string to_display_string(const Rational &q);

// num/den in lowest terms. The two-argument mpq_class constructor does not
// reduce; use this instead. Throws PreconditionError for den == 0.
Rational make_rational(const mpz_class &num, const mpz_class &den);

// Accepts "p" or "p/q" with an optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

} // namespace hopfgl

#endif
