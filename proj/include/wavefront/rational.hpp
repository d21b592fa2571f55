#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wavefront {

/// Exact rational number. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& r);

}  // namespace wavefront
