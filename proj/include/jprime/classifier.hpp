#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jprime/bessel.hpp"
#include "jprime/bigfloat.hpp"
#include "jprime/determinant.hpp"
#include "jprime/errors.hpp"
#include "jprime/moments.hpp"
#include "jprime/opoly.hpp"
#include "jprime/rational.hpp"
#include "jprime/sturm.hpp"

namespace jprime {

namespace detail {

inline void require_hankel_domain(const Rational& nu) {
  if (is_nonpositive_integer(nu))
    throw Error(ErrorKind::NonpositiveIntegerNu, "nu = " + to_string(nu) + " is a nonpositive integer");
}

}  // namespace detail

/// Delta_n = h_{n+1} h_{n+2} / (2^{(n+1)^2} prod_{j=1}^{n+1} (nu+j)^{2n+3-2j}).
inline Rational hankel_delta(const Rational& nu, unsigned n) {
  detail::require_hankel_domain(nu);
  const auto h = build_h_values(nu, n + 2);
  Rational den = 1;
  for (unsigned j = 1; j <= n + 1; ++j) den *= pow(nu + j, 2 * n + 3 - 2 * j);
  mpz_mul_2exp(den.get_num_mpz_t(), den.get_num_mpz_t(), (n + 1) * (n + 1));
  den.canonicalize();
  return h[n + 1] * h[n + 2] / den;
}

/// det(mu_{i+j})_{0<=i,j<=n} by fraction-free elimination.
inline Rational hankel_delta_direct(const Rational& nu, unsigned n) {
  detail::require_hankel_domain(nu);
  const MomentTable mu(nu, 2 * n);
  RationalMatrix m(n + 1, std::vector<Rational>(n + 1));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) m[i][j] = mu[i + j];
  return bareiss_determinant(m);
}

struct HankelRow {
  unsigned n = 0;
  Rational delta_closed;
  std::optional<Rational> delta_direct;
  Rational lambda;
  int lambda_sign = 0;
};

struct HankelReport {
  Rational nu;
  std::vector<HankelRow> rows;
};

namespace detail {

/// h_0 .. h_{n_max}; throws NuInM at the first vanishing value.
inline std::vector<Rational> h_values_off_M(const Rational& nu, unsigned n_max) {
  require_hankel_domain(nu);
  auto h = build_h_values(nu, n_max);
  for (unsigned j = 0; j <= n_max; ++j)
    if (sgn(h[j]) == 0)
      throw Error(ErrorKind::NuInM, "h_" + std::to_string(j) + "(nu) = 0 at nu = " + to_string(nu));
  return h;
}

inline int lambda_sign_from_h(const Rational& nu, const Rational& h_n, const Rational& h_n2, unsigned n) {
  return sgn(nu + n + 1) * sgn(h_n) * sgn(h_n2);
}

}  // namespace detail

/// Rows 0..n_max of Delta_n and Lambda_n = Delta_{n-1} Delta_n (Delta_{-1} = 1).
/// The direct determinant is filled in when `with_direct` is set.
inline HankelReport lambda_sequence(const Rational& nu, unsigned n_max, bool with_direct = false) {
  const auto h = detail::h_values_off_M(nu, n_max + 2);
  HankelReport report{nu, {}};
  Rational prev = 1;
  for (unsigned n = 0; n <= n_max; ++n) {
    HankelRow row;
    row.n = n;
    row.delta_closed = hankel_delta(nu, n);
    if (with_direct) row.delta_direct = hankel_delta_direct(nu, n);
    row.lambda = prev * row.delta_closed;
    row.lambda_sign = sgn(row.lambda);
    if (row.lambda_sign != detail::lambda_sign_from_h(nu, h[n], h[n + 2], n))
      throw std::logic_error("sign of Lambda_n disagrees with its h-value form");
    prev = row.delta_closed;
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Number of negative Lambda_n before the sign sequence settles: the scan stops
/// at the first n >= ceil|nu| + 2 whose last `window` signs are all +1.
inline unsigned count_negatives(const Rational& nu, unsigned window) {
  detail::require_hankel_domain(nu);
  if (window == 0) throw Error(ErrorKind::InvalidArgument, "window must be positive");
  constexpr unsigned kHardCap = 500;
  const Rational abs_nu = abs(nu);
  const unsigned start = static_cast<unsigned>(ceil(abs_nu).get_ui()) + 2;
  auto check = [&](const Rational& v, unsigned j) {
    if (sgn(v) == 0) throw Error(ErrorKind::NuInM, "h_" + std::to_string(j) + "(nu) = 0 at nu = " + to_string(nu));
  };
  // h_{n}, h_{n+1}, h_{n+2} rolling
  Rational h0 = 1, h1 = 1;
  Rational h2 = 2 * (nu + 1) / nu * h1 - h0;
  check(h2, 2);
  unsigned negatives = 0, run = 0;
  for (unsigned n = 0; n <= kHardCap; ++n) {
    int s = detail::lambda_sign_from_h(nu, h0, h2, n);
    if (s < 0) {
      ++negatives;
      run = 0;
    } else {
      ++run;
    }
    if (n >= start && run >= window) return negatives;
    Rational h3 = 2 * (nu + n + 2) / nu * h2 - h1;
    check(h3, n + 3);
    h0 = std::move(h1);
    h1 = std::move(h2);
    h2 = std::move(h3);
  }
  throw Error(ErrorKind::NonStabilized, "no run of " + std::to_string(window) + " positive signs by n = " +
                                            std::to_string(kHardCap) + " at nu = " + to_string(nu));
}

/// The double zero nu_k of J'_nu at x = |nu|, inside (-k-1/2, -k).
struct NuKEntry {
  unsigned k = 0;
  Interval bracket;
  BigFloat value;
  BigFloat residual;
};

/// Locates the unique zero of g(nu) = J'_nu(|nu|) on (-k-1/2, -k).
inline NuKEntry find_nu_k(unsigned k, const BigFloat& tol) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const Interval bracket(Rational(-2 * static_cast<long>(k) - 1, 2), Rational(-static_cast<long>(k)));
  mpfr_prec_t bits = detail::bits_for(static_cast<double>(k) + 1, tol) + 32;
  for (int attempt = 0; attempt < 4; ++attempt, bits *= 2) {
    auto g = [&](const BigFloat& nu) { return eval_jprime(nu, abs(nu)); };
    BigFloat lo(bracket.lo, bits), hi(bracket.hi, bits);
    BigFloat g_lo = g(lo), g_hi = g(hi);
    if (g_lo.sign() == 0 || g_hi.sign() == 0 || g_lo.sign() == g_hi.sign()) continue;
    BigFloat value = detail::refine_bracket(g, lo, hi, g_lo, g_hi, BigFloat(tol, bits));
    BigFloat residual = abs(g(value));
    return {k, bracket, std::move(value), std::move(residual)};
  }
  throw Error(ErrorKind::BracketSignFailure,
              "J'_nu(|nu|) has equal signs at both ends of (-" + std::to_string(k) + "-1/2, -" + std::to_string(k) + ")");
}

enum class ZeroCase { PositiveOrInteger, Minus1To0, KBandRight, KBandLeft };

constexpr const char* case_name(ZeroCase c) {
  switch (c) {
    case ZeroCase::PositiveOrInteger: return "positive_or_integer";
    case ZeroCase::Minus1To0: return "minus1_to_0";
    case ZeroCase::KBandRight: return "k_band_right";
    case ZeroCase::KBandLeft: return "k_band_left";
  }
  return "?";
}

struct ZeroClassification {
  std::variant<Rational, BigFloat> nu;
  ZeroCase case_label = ZeroCase::PositiveOrInteger;
  std::optional<unsigned> k;
  unsigned complex_count = 0;
  bool imaginary_pair = false;
  std::optional<unsigned> counted_negatives;
  /// Set when J'_nu(|nu|) could not be separated from zero; the result then
  /// follows the closed convention nu_k <= nu and reports the right band.
  bool side_undecidable = false;
};

struct ClassifyOptions {
  bool cross_check = true;
  unsigned window = 10;
  mpfr_prec_t min_bits = 128;
  mpfr_prec_t max_bits = 8192;
};

namespace detail {

/// +1 if nu lies left of nu_k, -1 if right, 0 if undecidable. Uses the sign of
/// F_nu(|nu|) = 2^nu Gamma(nu) |nu|^{1-nu} J'_nu(|nu|); the Gamma factor has
/// sign (-1)^{k+1} on (-k-1, -k), the same as J'_nu(|nu|) left of nu_k.
template <class Nu>
int side_of_nu_k(const Nu& nu, const BigFloat& abs_nu, const ClassifyOptions& opt) {
  for (mpfr_prec_t p = opt.min_bits; p <= opt.max_bits; p *= 2) {
    SeriesValue s;
    try {
      s = normalized_jprime(nu, BigFloat(abs_nu, p), p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PrecisionExhausted) return 0;
      throw;
    }
    BigFloat threshold = ldexp(BigFloat(s.abs_sum, p), -static_cast<long>(p / 2));
    if (abs(s.value) > threshold) return s.value.sign() > 0 ? 1 : -1;
  }
  return 0;
}

inline void fill_band(ZeroClassification& out, unsigned k, int side) {
  out.k = k;
  if (k == 0) {
    out.case_label = ZeroCase::Minus1To0;
    out.complex_count = 2;
    out.imaginary_pair = true;
    return;
  }
  out.imaginary_pair = k % 2 == 0;
  if (side > 0) {
    out.case_label = ZeroCase::KBandLeft;
    out.complex_count = 2 * k + 2;
  } else {
    out.case_label = ZeroCase::KBandRight;
    out.complex_count = 2 * k - 2;
    out.side_undecidable = side == 0;
  }
}

}  // namespace detail

inline ZeroClassification classify(const Rational& nu, const ClassifyOptions& opt = {}) {
  ZeroClassification out;
  out.nu = nu;
  if (sgn(nu) >= 0 || is_integer(nu)) {
    out.case_label = ZeroCase::PositiveOrInteger;
  } else {
    const unsigned k = static_cast<unsigned>(floor(Rational(-nu)).get_ui());
    int side = 0;
    if (k > 0) side = detail::side_of_nu_k(nu, BigFloat(Rational(-nu), opt.max_bits), opt);
    detail::fill_band(out, k, side);
  }
  if (opt.cross_check && !is_nonpositive_integer(nu)) {
    for (unsigned w = opt.window; w <= 16 * opt.window; w *= 4) {
      try {
        unsigned c = count_negatives(nu, w);
        if (2 * c == out.complex_count) {
          out.counted_negatives = c;
          break;
        }
      } catch (const Error&) {
        break;
      }
    }
  }
  return out;
}

inline ZeroClassification classify(const BigFloat& nu, const ClassifyOptions& opt = {}) {
  if (nu.precision() <= 4096) {
    ZeroClassification out = classify(nu.to_rational(), ClassifyOptions{false, opt.window, opt.min_bits, opt.max_bits});
    out.nu = nu;
    return out;
  }
  ZeroClassification out;
  out.nu = nu;
  if (nu.sign() >= 0 || nu.is_integer()) {
    out.case_label = ZeroCase::PositiveOrInteger;
    return out;
  }
  const BigFloat abs_nu = abs(nu);
  const unsigned k = static_cast<unsigned>(abs_nu.to_long_floor());
  int side = 0;
  if (k > 0) side = detail::side_of_nu_k(nu, abs_nu, opt);
  detail::fill_band(out, k, side);
  return out;
}

}  // namespace jprime
