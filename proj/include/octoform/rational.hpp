#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace octoform {

// Every coefficient in this library is an exact rational. GMP's canonical
// rational type carries the arithmetic; the helpers below pin down the one
// serialization format used everywhere: "p/q" with q > 0 and gcd(p,q) = 1,
// plain "p" when the denominator is 1.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational rational_from_string(std::string_view text);

std::string to_fraction_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace octoform
