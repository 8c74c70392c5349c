#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace kscheck {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational. The backend keeps every value reduced
// (gcd(|num|, den) = 1, den > 0); all arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline Rational make_rational(Int numerator_value, Int denominator_value) {
  if (denominator_value == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  if (denominator_value < 0) {
    numerator_value = -numerator_value;
    denominator_value = -denominator_value;
  }
  return Rational(std::move(numerator_value), std::move(denominator_value));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Serialized form used in every JSON format: "p/q", or just "p" when q = 1.
inline std::string format_rational(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) {
    s += '/';
    s += den(q).str();
  }
  return s;
}

inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view t) -> Int {
    std::string_view digits = t;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty()) {
      throw std::invalid_argument("parse_rational: empty integer");
    }
    for (char ch : digits) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("parse_rational: bad character in \"" +
                                    std::string(t) + "\"");
      }
    }
    return Int(std::string(t));
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  Int p = parse_int(text.substr(0, slash));
  Int q = parse_int(text.substr(slash + 1));
  return make_rational(std::move(p), std::move(q));
}

// Floor of the integer square root.
inline Int integer_sqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = integer_sqrt(n);
  return r * r == n;
}

// Exact nonnegative square root when q is the square of a rational,
// std::nullopt otherwise. Because q is stored reduced, q is a rational square
// iff its numerator and denominator are both integer squares.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) throw std::domain_error("rational_sqrt: negative input");
  Int rn = integer_sqrt(num(q));
  if (rn * rn != num(q)) return std::nullopt;
  Int rd = integer_sqrt(den(q));
  if (rd * rd != den(q)) return std::nullopt;
  return Rational(std::move(rn), std::move(rd));
}

// Decimal expansion truncated (not rounded) to `digits` fractional digits.
// Only defined for nonnegative values, which is all we print.
inline std::string decimal_string(const Rational& q, int digits) {
  if (q < 0) throw std::invalid_argument("decimal_string: negative value");
  Int whole = num(q) / den(q);
  Int rem = num(q) % den(q);
  std::string s = whole.str();
  if (digits <= 0) return s;
  s += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    Int digit = rem / den(q);
    rem %= den(q);
    s += static_cast<char>('0' + digit.convert_to<int>());
  }
  return s;
}

}  // namespace kscheck
