#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gaussfano {

// Canonical form (gcd 1, positive denominator) is maintained by gmpxx for
// every arithmetic result; values built from raw parts go through
// make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "-p" or "p/q" with q > 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace gaussfano
