#ifndef LEFSCHETZ_RATIONAL_HPP
#define LEFSCHETZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lefschetz {

/// Exact scalar used for every coefficient, weight and trace.
using Rational = mpq_class;

/// Parses "p/q" or "n" (optional leading minus). Throws MalformedInput.
Rational parse_rational(std::string_view text);

/// Canonical text: "n" for integers, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace lefschetz

#endif
