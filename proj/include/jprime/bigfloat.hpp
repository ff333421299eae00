#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "jprime/errors.hpp"
#include "jprime/rational.hpp"

namespace jprime {

/// RAII handle over an MPFR number. Precision travels with the value: a
/// binary operation rounds to the larger precision of its operands, so no
/// ambient precision state exists.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 64;

  explicit BigFloat(mpfr_prec_t bits = 128) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, mpfr_prec_t bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  BigFloat(long i, mpfr_prec_t bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_si(v_, i, MPFR_RNDN);
  }
  BigFloat(int i, mpfr_prec_t bits) : BigFloat(static_cast<long>(i), bits) {}
  BigFloat(const Rational& q, mpfr_prec_t bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const Integer& z, mpfr_prec_t bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  /// Parses a decimal literal; throws InvalidArgument on malformed text.
  BigFloat(const std::string& text, mpfr_prec_t bits) {
    mpfr_init2(v_, clamp(bits));
    if (text.empty() || mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw Error(ErrorKind::InvalidArgument, "not a decimal literal: '" + text + "'");
    }
  }
  /// Copy of `other` rounded to `bits`.
  BigFloat(const BigFloat& other, mpfr_prec_t bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, other.v_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  /// Binary exponent e with 0.5 <= |v| / 2^e < 1; very negative for zero.
  long exponent() const { return is_zero() || !is_finite() ? -(1L << 40) : mpfr_get_exp(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const { return mpfr_get_si(v_, MPFR_RNDD); }

  /// Exact rational value of this binary floating-point number.
  Rational to_rational() const {
    Rational out;
    mpfr_get_q(out.get_mpq_t(), v_);
    return out;
  }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const {
    if (is_zero()) return "0";
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(1, digits - 1), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Shortest of fixed/scientific with up to `digits` significant digits.
  std::string to_general(int digits = 20) const {
    if (is_zero()) return "0";
    if (!is_finite()) return to_string();
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", std::max(1, digits), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", std::max(0, decimals), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') out.erase(0, 1);
    return out;
  }

  BigFloat& operator+=(const BigFloat& o) { return apply(o, mpfr_add); }
  BigFloat& operator-=(const BigFloat& o) { return apply(o, mpfr_sub); }
  BigFloat& operator*=(const BigFloat& o) { return apply(o, mpfr_mul); }
  BigFloat& operator/=(const BigFloat& o) { return apply(o, mpfr_div); }
  BigFloat& operator+=(const Rational& q) {
    mpfr_add_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const Rational& q) {
    mpfr_sub_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const Rational& q) {
    mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const Rational& q) {
    mpfr_div_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const Integer& z) {
    mpfr_mul_z(v_, v_, z.get_mpz_t(), MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const Integer& z) {
    mpfr_div_z(v_, v_, z.get_mpz_t(), MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(long i) {
    mpfr_mul_si(v_, v_, i, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(long i) {
    mpfr_div_si(v_, v_, i, MPFR_RNDN);
    return *this;
  }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator+(BigFloat a, const Rational& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const Rational& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const Rational& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const Rational& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
  friend BigFloat operator-(BigFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend BigFloat abs(BigFloat a) {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat sqrt(BigFloat a) {
    mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat sin(BigFloat a) {
    mpfr_sin(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat log2(BigFloat a) {
    mpfr_log2(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat gamma(BigFloat a) {
    mpfr_gamma(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat pow(BigFloat base, const BigFloat& exp) {
    mpfr_pow(base.v_, base.v_, exp.v_, MPFR_RNDN);
    return base;
  }
  /// 2^e * a.
  friend BigFloat ldexp(BigFloat a, long e) {
    mpfr_mul_2si(a.v_, a.v_, e, MPFR_RNDN);
    return a;
  }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t bits) { return std::max(bits, kMinPrecision); }

  template <class Op>
  BigFloat& apply(const BigFloat& o, Op op) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

}  // namespace jprime
