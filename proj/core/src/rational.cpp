#include "themeorder/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "themeorder/error.hpp"

namespace themeorder {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("", "not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), whole);
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("", "zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw ParseError("", "not a rational number: '" + std::string(whole) + "'");
  for (char c : frac_part) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("", "not a rational number: '" + std::string(whole) + "'");
  }
  if (frac_part.size() > 15) throw ParseError("", "too many decimal places in '" + std::string(whole) + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
  const std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
  if (ip > std::numeric_limits<std::int64_t>::max() / den - 1) {
    throw ParseError("", "number out of range: '" + std::string(whole) + "'");
  }
  Rational r(ip * den + fp, den);
  return negative ? -r : r;
}

std::string to_fraction_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_exact_decimal_string(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) return to_fraction_string(r);
  if (r.denominator() == 1) return std::to_string(r.numerator());

  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t scaled = r.numerator() * (scale / r.denominator());
  const bool negative = scaled < 0;
  const std::int64_t mag = negative ? -scaled : scaled;
  std::string frac = std::to_string(mag % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return (negative ? "-" : "") + std::to_string(mag / scale) + "." + frac;
}

}  // namespace themeorder
