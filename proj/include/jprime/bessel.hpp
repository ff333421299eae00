#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "jprime/bigfloat.hpp"
#include "jprime/errors.hpp"
#include "jprime/rational.hpp"

namespace jprime {

/// Coefficient c_{2k} of x^{2k} in the normalized derivative
///   2^nu Gamma(nu) x^{1-nu} J'_nu(x) = sum_k c_{2k} x^{2k},
///   c_{2k} = (-1)^k (nu/2+1)_k / (k! 4^k (nu/2)_k (nu+1)_k).
inline Rational series_coeff(const Rational& nu, unsigned k) {
  if (is_nonpositive_integer(nu))
    throw Error(ErrorKind::NonpositiveIntegerNu, "nu = " + to_string(nu) + " is a nonpositive integer");
  const Rational half = nu / 2;
  Rational num = 1, den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= -(half + 1 + j);
    den *= Rational(4 * (j + 1)) * (half + j) * (nu + 1 + j);
  }
  if (sgn(den) == 0) throw Error(ErrorKind::PoleAtNu, "Pochhammer denominator vanishes at nu = " + to_string(nu));
  return num / den;
}

/// Coefficient of x^n (any n); odd indices are zero.
inline Rational series_coeff_at(const Rational& nu, unsigned n) {
  if (n % 2 == 1) {
    if (is_nonpositive_integer(nu))
      throw Error(ErrorKind::NonpositiveIntegerNu, "nu = " + to_string(nu) + " is a nonpositive integer");
    return 0;
  }
  return series_coeff(nu, n / 2);
}

/// c_0, c_1, ..., c_n (odd entries zero), computed with one running product.
inline std::vector<Rational> series_coeffs(const Rational& nu, unsigned n) {
  if (is_nonpositive_integer(nu))
    throw Error(ErrorKind::NonpositiveIntegerNu, "nu = " + to_string(nu) + " is a nonpositive integer");
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  const Rational half = nu / 2;
  Rational running = 1;
  for (unsigned k = 1; 2 * k <= n; ++k) {
    Rational den = Rational(4 * k) * (half + k - 1) * (nu + k);
    if (sgn(den) == 0) throw Error(ErrorKind::PoleAtNu, "Pochhammer denominator vanishes at nu = " + to_string(nu));
    running *= -(half + k) / den;
    c[2 * k] = running;
  }
  return c;
}

/// A series value together with the sum of the absolute values of its terms,
/// which bounds the cancellation that took place.
struct SeriesValue {
  BigFloat value;
  BigFloat abs_sum;
};

namespace detail {

/// Sums t_0 + t_1 + ... with t_0 = 1 and t_k = t_{k-1} * x^2 * r_k, where
/// step(term, k) multiplies by r_k. Terms past k_tail have |x^2 r_k| <= 1/3.
/// The working precision grows until the result carries `prec` correct bits.
template <class MakeStep>
SeriesValue sum_even_series(const BigFloat& x, mpfr_prec_t prec, double k_tail, MakeStep&& make_step) {
  const double xd = std::fabs(x.to_double());
  const mpfr_prec_t base = prec + 32 + static_cast<mpfr_prec_t>(1.5 * xd);
  const mpfr_prec_t cap = 8 * base + 4096;
  mpfr_prec_t w = base;
  const unsigned k_min = static_cast<unsigned>(std::ceil(std::max(k_tail, 2.0 * xd))) + 1;
  while (true) {
    auto step = make_step(w);
    BigFloat x2(x, w);
    x2 *= x2;
    BigFloat term(1L, w), sum(1L, w), abs_sum(1.0, 64);
    unsigned k = 1;
    for (;; ++k) {
      term *= x2;
      step(term, k);
      sum += term;
      BigFloat mag(abs(term), 64);
      abs_sum += mag;
      if (k >= k_min && (term.is_zero() || term.exponent() < sum.exponent() - w)) break;
    }
    long lost = sum.is_zero() ? w : abs_sum.exponent() - sum.exponent();
    long log_terms = static_cast<long>(std::ceil(std::log2(static_cast<double>(k) + 1.0)));
    mpfr_prec_t need = prec + 16 + log_terms + std::max(0L, lost);
    if (need <= w) return {BigFloat(sum, prec), abs_sum};
    if (w >= cap)
      throw Error(ErrorKind::PrecisionExhausted,
                  "series cancellation exceeds " + std::to_string(cap) + " working bits");
    w = std::min(cap, std::max(need + 32, 2 * w));
  }
}

/// Multiplies by the ratio c_{2k}/c_{2k-2} for a rational order a/b.
struct RationalDerivStep {
  Integer a, b;
  void operator()(BigFloat& term, unsigned k) const {
    Integer num = -b * (a + 2 * k * b);
    Integer den = 4 * Integer(k) * (a + 2 * (k - 1) * b) * (a + k * b);
    term *= num;
    term /= den;
  }
};

struct FloatDerivStep {
  BigFloat nu;
  void operator()(BigFloat& term, unsigned k) const {
    BigFloat half = nu / 2L;
    BigFloat num = half + Rational(k);
    BigFloat den = (half + Rational(k - 1)) * (nu + Rational(k));
    den *= static_cast<long>(4 * k);
    term *= num;
    term /= den;
    term = -term;
  }
};

/// Ratio for the J_nu series: -1 / (4 k (nu + k)).
struct RationalJStep {
  Integer a, b;
  void operator()(BigFloat& term, unsigned k) const {
    term *= Integer(-b);
    term /= Integer(4 * Integer(k) * (a + k * b));
  }
};

struct FloatJStep {
  BigFloat nu;
  void operator()(BigFloat& term, unsigned k) const {
    BigFloat den = nu + Rational(k);
    den *= -static_cast<long>(4 * k);
    term /= den;
  }
};

inline double tail_index(double abs_nu) { return 2.0 * abs_nu + 2.0; }

inline void require_positive_x(const BigFloat& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "argument x must be positive");
}

inline mpfr_prec_t guard(mpfr_prec_t p) { return p + 32; }

}  // namespace detail

/// F_nu(x) = 2^nu Gamma(nu) x^{1-nu} J'_nu(x), summed from the even series.
/// Relative accuracy 2^-prec (prec defaults to x's precision).
inline SeriesValue normalized_jprime(const Rational& nu, const BigFloat& x, mpfr_prec_t prec = 0) {
  if (is_nonpositive_integer(nu))
    throw Error(ErrorKind::NonpositiveIntegerNu, "nu = " + to_string(nu) + " is a nonpositive integer");
  if (prec == 0) prec = x.precision();
  detail::RationalDerivStep step{nu.get_num(), nu.get_den()};
  return detail::sum_even_series(x, prec, detail::tail_index(std::fabs(nu.get_d())),
                                 [&](mpfr_prec_t) { return step; });
}

inline SeriesValue normalized_jprime(const BigFloat& nu, const BigFloat& x, mpfr_prec_t prec = 0) {
  if (nu.is_integer() && nu.sign() <= 0)
    throw Error(ErrorKind::NonpositiveIntegerNu, "nu = " + nu.to_string() + " is a nonpositive integer");
  if (prec == 0) prec = x.precision();
  return detail::sum_even_series(x, prec, detail::tail_index(std::fabs(nu.to_double())), [&](mpfr_prec_t w) {
    return detail::FloatDerivStep{BigFloat(nu, std::max(w, nu.precision()))};
  });
}

namespace detail {

/// J_nu(x) for nu not a negative integer, x > 0.
inline BigFloat j_series(const BigFloat& nu, const std::optional<Rational>& exact_nu, const BigFloat& x,
                         mpfr_prec_t prec) {
  const mpfr_prec_t w = guard(prec);
  SeriesValue s = exact_nu
                      ? sum_even_series(x, w, tail_index(std::fabs(nu.to_double())),
                                        [&](mpfr_prec_t) { return RationalJStep{exact_nu->get_num(), exact_nu->get_den()}; })
                      : sum_even_series(x, w, tail_index(std::fabs(nu.to_double())), [&](mpfr_prec_t ww) {
                          return FloatJStep{BigFloat(nu, std::max(ww, nu.precision()))};
                        });
  BigFloat nu_w(nu, w);
  BigFloat half_x = BigFloat(x, w) / 2L;
  BigFloat pre = pow(half_x, nu_w) / gamma(nu_w + Rational(1));
  return BigFloat(pre * s.value, prec);
}

inline BigFloat jprime_series(const BigFloat& nu, const std::optional<Rational>& exact_nu, const BigFloat& x,
                              mpfr_prec_t prec) {
  const mpfr_prec_t w = guard(prec);
  SeriesValue s = exact_nu ? normalized_jprime(*exact_nu, BigFloat(x, std::max(w, x.precision())), w)
                           : normalized_jprime(nu, BigFloat(x, std::max(w, x.precision())), w);
  BigFloat nu_w(nu, w);
  BigFloat xw(x, w);
  // x^{nu-1} / (2^nu Gamma(nu))
  BigFloat pre = pow(xw, nu_w - Rational(1)) / (pow(BigFloat(2L, w), nu_w) * gamma(nu_w));
  return BigFloat(pre * s.value, prec);
}

inline BigFloat eval_j_impl(const BigFloat& nu, const std::optional<Rational>& exact_nu, const BigFloat& x) {
  const mpfr_prec_t prec = std::max(x.precision(), nu.precision());
  if (x.sign() < 0) throw Error(ErrorKind::InvalidArgument, "argument x must be nonnegative");
  if (nu.is_integer() && nu.sign() < 0) {
    // J_{-n} = (-1)^n J_n
    long n = -nu.to_long_floor();
    BigFloat v = eval_j_impl(-nu, Rational(n), x);
    return n % 2 == 0 ? v : -v;
  }
  if (x.is_zero()) {
    if (nu.is_zero()) return BigFloat(1L, prec);
    if (nu.sign() > 0) return BigFloat(prec);
    throw Error(ErrorKind::InvalidArgument, "J_nu(0) is unbounded for negative noninteger nu");
  }
  return j_series(nu, exact_nu, x, prec);
}

inline BigFloat eval_jprime_impl(const BigFloat& nu, const std::optional<Rational>& exact_nu, const BigFloat& x) {
  require_positive_x(x);
  const mpfr_prec_t prec = std::max(x.precision(), nu.precision());
  if (nu.is_integer() && nu.sign() <= 0) {
    long n = -nu.to_long_floor();
    if (n == 0) return -eval_j_impl(BigFloat(1L, prec), Rational(1), x);  // J_0' = -J_1
    BigFloat v = jprime_series(BigFloat(n, prec), Rational(n), x, prec);
    return n % 2 == 0 ? v : -v;  // J'_{-n} = (-1)^n J'_n
  }
  return jprime_series(nu, exact_nu, x, prec);
}

}  // namespace detail

/// J_nu(x), x >= 0. Precision is the larger of the operands' precisions.
inline BigFloat eval_j(const BigFloat& nu, const BigFloat& x) { return detail::eval_j_impl(nu, std::nullopt, x); }

inline BigFloat eval_j(const Rational& nu, const BigFloat& x) {
  return detail::eval_j_impl(BigFloat(nu, x.precision() + 32), nu, x);
}

/// J'_nu(x), x > 0, for any real order.
inline BigFloat eval_jprime(const BigFloat& nu, const BigFloat& x) {
  return detail::eval_jprime_impl(nu, std::nullopt, x);
}

inline BigFloat eval_jprime(const Rational& nu, const BigFloat& x) {
  return detail::eval_jprime_impl(BigFloat(nu, x.precision() + 32), nu, x);
}

namespace detail {

/// Bracketed root refinement: Illinois steps with a bisection fallback
/// whenever the bracket fails to halve over three steps.
template <class F>
BigFloat refine_bracket(F&& f, BigFloat lo, BigFloat hi, BigFloat f_lo, BigFloat f_hi, const BigFloat& tol) {
  int side = 0;
  BigFloat checkpoint = hi - lo;
  int since_checkpoint = 0;
  while (hi - lo > tol) {
    BigFloat width = hi - lo;
    BigFloat c(lo.precision());
    bool bisect = since_checkpoint >= 3;
    if (!bisect) {
      // correction form: f may carry far fewer bits than the abscissae
      c = lo + width * (f_lo / (f_lo - f_hi));
      if (!c.is_finite()) {
        bisect = true;
      } else {
        // a step that would land within tol/2 of an endpoint straddles instead
        BigFloat half_tol = tol / 2L;
        if (c < lo + half_tol) c = lo + half_tol;
        if (c > hi - half_tol) c = hi - half_tol;
      }
    }
    if (bisect) {
      c = (lo + hi) / 2L;
      since_checkpoint = 0;
      checkpoint = width;
    }
    BigFloat fc = f(c);
    if (fc.is_zero()) return c;
    if (fc.sign() == f_hi.sign()) {
      hi = c;
      f_hi = fc;
      if (side == -1) f_lo /= 2L;
      side = -1;
    } else {
      lo = c;
      f_lo = fc;
      if (side == 1) f_hi /= 2L;
      side = 1;
    }
    if (hi - lo <= checkpoint / 2L) {
      checkpoint = hi - lo;
      since_checkpoint = 0;
    } else {
      ++since_checkpoint;
    }
  }
  return (lo + hi) / 2L;
}

inline mpfr_prec_t bits_for(double magnitude, const BigFloat& tol) {
  double lt = -tol.exponent();
  return static_cast<mpfr_prec_t>(std::max(64.0, std::log2(std::max(magnitude, 1.0)) + lt + 24.0));
}

}  // namespace detail

/// First `count` positive zeros of J'_nu (nu > 0) in increasing order, each
/// within `tol`. Brackets come from a scan of step pi/4 starting at
/// max(nu, tol); refinement keeps the bracket.
inline std::vector<BigFloat> find_real_zeros(const BigFloat& nu, std::size_t count, const BigFloat& tol) {
  if (nu.sign() <= 0) throw Error(ErrorKind::NonpositiveNu, "find_real_zeros requires nu > 0");
  if (tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  std::vector<BigFloat> zeros;
  if (count == 0) return zeros;
  const double nud = nu.to_double();
  const double x_max_estimate = nud + (static_cast<double>(count) + nud / 2 + 2) * M_PI;
  const mpfr_prec_t bits = std::max(detail::bits_for(x_max_estimate, tol), nu.precision());
  std::optional<Rational> exact;
  if (nu.precision() <= 4096) exact = nu.to_rational();
  // Only the sign matters; 32 correct bits keep interpolation well behaved.
  auto f = [&](const BigFloat& x) {
    return exact ? normalized_jprime(*exact, x, 32).value : normalized_jprime(nu, x, 32).value;
  };
  const BigFloat step = BigFloat::pi(bits) / 4L;
  BigFloat x(nu, bits);
  if (x < tol) x = BigFloat(tol, bits);
  BigFloat fx = f(x);
  const std::size_t max_steps = static_cast<std::size_t>(4.0 * x_max_estimate / M_PI) * 2 + 1000;
  std::size_t steps = 0;
  while (zeros.size() < count) {
    if (++steps > max_steps)
      throw Error(ErrorKind::BracketFailure, "scan exhausted after " + std::to_string(max_steps) + " steps");
    BigFloat next = x + step;
    BigFloat f_next = f(next);
    if (f_next.is_zero()) {
      zeros.push_back(next);
      x = next + tol;
      fx = f(x);
      continue;
    }
    if (fx.sign() != f_next.sign()) {
      zeros.push_back(detail::refine_bracket(f, x, next, fx, f_next, tol));
    }
    x = std::move(next);
    fx = std::move(f_next);
  }
  return zeros;
}

}  // namespace jprime
