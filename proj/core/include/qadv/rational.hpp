#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qadv {

/// Exact arbitrary-precision rational. Every bound comparison in the library
/// goes through this type; doubles only appear in human-readable fields.
using Rational = mpq_class;

/// Canonical "num/den" form. Integers keep their denominator ("2/1").
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double d);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Returns true and writes the root when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace qadv
