#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace leibniz {

// Exact rational scalar. GMP's mpq_class already maintains the canonical
// form we rely on everywhere (denominator > 0, gcd(|num|, den) = 1, zero
// stored as 0/1), so equality of values is equality of representations.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

// Parses "p" or "p/q" with decimal integer p and positive decimal integer q.
// Anything else (whitespace, signs on q, empty fields, hex, floats) throws
// ParseError.
Rational rat_parse(const std::string& text);

// Formats canonically: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rational& value);

bool vec_is_zero(const Vec& v);

} // namespace leibniz

#endif
