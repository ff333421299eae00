#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jprime/errors.hpp"
#include "jprime/rational.hpp"

namespace jprime {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; the trailing coefficient is nonzero unless the
/// polynomial is zero, in which case coeffs() is empty.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit RationalPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  RationalPoly(const Rational& constant) {  // NOLINT: implicit scalar promotion
    if (sgn(constant) != 0) c_.push_back(constant);
  }
  RationalPoly(int constant) : RationalPoly(Rational(constant)) {}  // NOLINT

  static RationalPoly x() { return RationalPoly({0, 1}); }

  static RationalPoly monomial(const Rational& coeff, std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return RationalPoly(std::move(c));
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Horner evaluation for any ring that accepts a Rational on the right.
  template <class T>
  T eval(const T& at) const {
    T acc = at * Rational(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  RationalPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return RationalPoly(std::move(d));
  }

  /// p(-x).
  RationalPoly reflect() const {
    auto c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return RationalPoly(std::move(c));
  }

  /// x^deg p(1/x).
  RationalPoly reversed() const {
    auto c = c_;
    std::reverse(c.begin(), c.end());
    return RationalPoly(std::move(c));
  }

  RationalPoly monic() const {
    if (is_zero()) return {};
    return *this / leading();
  }

  RationalPoly& operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  RationalPoly& operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  RationalPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  RationalPoly& operator/=(const Rational& s) { return *this *= Rational(1) / s; }

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend RationalPoly operator/(RationalPoly a, const Rational& s) { return a /= s; }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(c));
  }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q: returns {quotient, remainder}.
  friend std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {RationalPoly{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    const Rational inv_lead = Rational(1) / b.leading();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      Rational f = rem[k + db] * inv_lead;
      quo[k] = f;
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(db);
    return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
  }

  friend RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

  /// Divides out the positive rational content so that the result has
  /// coprime integer coefficients and the same sign pattern everywhere.
  RationalPoly primitive() const {
    if (is_zero()) return {};
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& v : c_) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_num_mpz_t());
    }
    return *this * Rational(lcm_den, gcd_num);
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& v = c_[k];
      if (sgn(v) == 0) continue;
      Rational mag = abs(v);
      if (first) {
        if (sgn(v) < 0) os << "-";
      } else {
        os << (sgn(v) < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0 || mag != 1) {
        os << mag.get_str();
        if (k > 0) os << "*";
      }
      if (k >= 1) os << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.to_string(); }

/// Monic gcd over Q.
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = (a % b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Exact quotient; throws NonexactDivision when b does not divide a.
inline RationalPoly exact_div(const RationalPoly& a, const RationalPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::NonexactDivision, "remainder " + r.to_string() + " is nonzero");
  return q;
}

}  // namespace jprime
