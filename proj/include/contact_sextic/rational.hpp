#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace contact_sextic {

// Arbitrary-precision rational; gmpxx keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws Error(Parse) on anything else.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

Rational factorial(unsigned n);

}  // namespace contact_sextic
