#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "jprime/errors.hpp"

namespace jprime {

/// Exact rational scalar. gmpxx keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && sgn(q) <= 0; }

inline Rational pow(const Rational& base, unsigned exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return out;
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
inline Rational pochhammer(const Rational& a, unsigned n) {
  Rational out = 1;
  for (unsigned j = 0; j < n; ++j) out *= a + j;
  return out;
}

inline Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

namespace detail {

inline std::optional<Rational> parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) return std::nullopt;
  Rational out(Integer(num), d);
  out.canonicalize();
  return out;
}

inline std::optional<Rational> parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return std::nullopt;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return std::nullopt;
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) exp_negative = text[i++] == '-';
    if (i == text.size()) return std::nullopt;
    long exp = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      exp = exp * 10 + (text[i] - '0');
      if (exp > 100000) return std::nullopt;
    }
    scale += exp_negative ? -exp : exp;
  }
  Integer mantissa(digits);
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational out = scale < 0 ? Rational(mantissa, ten_pow) : Rational(mantissa * ten_pow);
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal such as "-0.125" or "1e-3".
/// Decimal literals are converted exactly.
inline Rational parse_rational(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    if (auto q = detail::parse_fraction(text)) return *q;
  } else if (auto q = detail::parse_decimal(text)) {
    return *q;
  }
  throw Error(ErrorKind::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
}

inline bool is_fraction_literal(std::string_view text) {
  return detail::parse_fraction(text).has_value();
}

}  // namespace jprime
