#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "semideriv/errors.hpp"

namespace semideriv {

using Rational = boost::rational<std::int64_t>;

namespace detail {

inline std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses an exact rational from `7`, `-2.5`, `0.0625` or `3/4`.
inline Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = detail::parse_int(text.substr(0, slash), whole);
    const auto den = detail::parse_int(text.substr(slash + 1), whole);
    if (den <= 0) throw ParseError("invalid rational literal '" + std::string(whole) + "'");
    return Rational(num, den);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  if (dot != std::string_view::npos && frac_part.empty()) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  for (char ch : int_part) {
    if (ch < '0' || ch > '9') throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  for (char ch : frac_part) {
    if (ch < '0' || ch > '9') throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  if (frac_part.size() > 15) {
    throw ParseError("too many decimal places in '" + std::string(whole) + "'");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::string digits = std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part);
  const auto num = detail::parse_int(digits, whole);
  return Rational(negative ? -num : num, den);
}

/// Formats as a terminating decimal when one exists, otherwise as `p/q`.
inline std::string format_rational(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }
  const int places = std::max(twos, fives);
  if (places == 0) return std::to_string(r.numerator());

  // Scale to an integer count of 10^-places units.
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const std::int64_t units = r.numerator() * (scale / r.denominator());
  const bool negative = units < 0;
  const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(units) : static_cast<std::uint64_t>(units);
  std::string frac = std::to_string(mag % static_cast<std::uint64_t>(scale));
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(mag / static_cast<std::uint64_t>(scale)) + "." + frac;
}

}  // namespace semideriv
