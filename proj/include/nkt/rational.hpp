#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "nkt/error.hpp"

namespace nkt {

using Integer = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Renders as "p" or "p/q"; never as a decimal.
inline std::string to_string(const Rational& q) {
  Integer num = numerator_of(q);
  Integer den = denominator_of(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Accepts "p", "-p", "p/q" with decimal integers.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return error(errc::parse_error, "not a rational number: '" + std::string(text) + "'"); };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw fail();
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) throw fail();
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw fail();
    Integer value(part.substr(start));
    return part[0] == '-' ? Integer(-value) : value;
  };
  if (slash == std::string::npos) return Rational(parse_int(s, true));
  Integer num = parse_int(s.substr(0, slash), true);
  Integer den = parse_int(s.substr(slash + 1), false);
  if (den == 0) throw error(errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Exact square root of a non-negative integer, if it is a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& z) {
  if (z < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(z);
  if (root * root != z) return std::nullopt;
  return root;
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_sqrt(numerator_of(q));
  auto den = exact_sqrt(denominator_of(q));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace nkt
