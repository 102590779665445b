#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jackprod {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "0.8" or "2.5e-1".
/// Decimals are converted exactly (0.8 -> 4/5); this is the only place a
/// float-looking input becomes a rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

/// Nearest double (ties to even); mpq_get_d alone truncates.
double to_double(const Rational& q);
inline double to_double(double v) { return v; }

}  // namespace jackprod
