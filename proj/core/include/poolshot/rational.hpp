#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace poolshot {

using Rational = mpq_class;

// n / d in lowest terms. mpq_class(n, d) alone does not reduce, and
// unreduced values break equality and numerator tests.
Rational ratio(long n, long d);
Rational ratio(const mpz_class& n, const mpz_class& d);

// Accepts "12", "-3/4", "37.5", "1e-3".
Rational parse_rational(std::string_view text);

// Exact decimal when the denominator has only factors 2 and 5, otherwise p/q.
std::string to_string(const Rational& v);

// Decimal rendering rounded toward -inf with the given number of significant digits.
std::string to_decimal_floor(const Rational& v, int significant);

mpz_class floor(const Rational& v);
Rational abs(const Rational& v);
double to_double(const Rational& v);

}  // namespace poolshot
