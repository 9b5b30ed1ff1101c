#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kstab {

using Integer = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// p/q in lowest terms. Throws InputError when q == 0.
Rational ratio(const Integer& p, const Integer& q = 1);

/// "p/q", or "p" when q == 1; negatives carry the sign on the numerator.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", "-p/q" (optional leading '+'). Rejects q == 0 and stray characters.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace kstab
