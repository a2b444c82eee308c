#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polytrope {

// GMP rationals are kept canonical (reduced, positive denominator) by every
// arithmetic operator, which is exactly the invariant the library relies on.
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional leading sign. Throws Error(malformed).
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace polytrope
