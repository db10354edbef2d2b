#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace themeorder {

using Rational = boost::rational<std::int64_t>;

/// Parses "3/5", "0.6", "2", "-1.25". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// Exact decimal expansion when the denominator has only factors 2 and 5,
/// otherwise the fraction form.
std::string to_exact_decimal_string(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace themeorder
