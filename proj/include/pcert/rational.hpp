#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pcert {

// GMP keeps mpq_class canonical (reduced, positive denominator) as long as
// every value is built through these helpers or arithmetic operators.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form; mpq_class(num, den) alone does not reduce.
/// Throws std::domain_error when den == 0.
Rational ratio(long num, long den);

/// Parses "p", "-p" or "p/q" (q != 0). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

bool is_integer(const Rational& r);

/// floor(r) as an Integer.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Returns c with c^e == z if such a rational exists. For even e only the
/// nonnegative root is returned.
std::optional<Rational> exact_root(const Rational& z, unsigned long e);

Integer pow(const Integer& base, unsigned long e);
Rational pow(const Rational& base, unsigned long e);

/// Converts to long; throws std::overflow_error if it does not fit.
long to_long(const Integer& z);

} // namespace pcert
