#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jprime/bigfloat.hpp"
#include "jprime/errors.hpp"
#include "jprime/poly.hpp"
#include "jprime/rational.hpp"
#include "jprime/sturm.hpp"

namespace jprime {

namespace detail {

inline void require_admissible(const Rational& nu) {
  if (is_nonpositive_integer(nu))
    throw Error(ErrorKind::NonadmissibleNu, "nu = " + to_string(nu) + " makes a recurrence coefficient singular");
}

inline void require_positive(const Rational& nu) {
  if (sgn(nu) <= 0) throw Error(ErrorKind::NonpositiveNu, "nu = " + to_string(nu) + " must be positive");
}

}  // namespace detail

/// beta_n = 1 / (4 (nu+n-1)(nu+n)), the recurrence coefficient of q_{n,nu}.
inline Rational beta(const Rational& nu, unsigned n) {
  detail::require_admissible(nu);
  return Rational(1) / (4 * (nu + n - 1) * (nu + n));
}

/// lambda_n = beta_1 ... beta_n = 1 / (4^n (nu)_n (nu+1)_n); lambda_0 = 1.
inline Rational lambda(const Rational& nu, unsigned n) {
  detail::require_admissible(nu);
  Rational den = pochhammer(nu, n) * pochhammer(nu + 1, n);
  mpz_mul_2exp(den.get_num_mpz_t(), den.get_num_mpz_t(), 2 * n);
  den.canonicalize();
  return Rational(1) / den;
}

/// epsilon_0 = 1/2, epsilon_j = 1 otherwise.
inline Rational epsilon(unsigned j) { return j == 0 ? Rational(1, 2) : Rational(1); }

/// Denominator polynomials q_{n,nu} of the continued fraction for
/// J_nu(1/x)/J'_nu(1/x) and the numerators q*_{n,nu}. Both obey
/// x y_n = y_{n+1} + beta_n y_{n-1}.
struct QFamily {
  Rational nu;
  std::vector<RationalPoly> q;
  std::vector<RationalPoly> q_star;

  unsigned n_max() const { return static_cast<unsigned>(q.size()) - 1; }
};

inline QFamily build_q(const Rational& nu, unsigned n_max) {
  detail::require_admissible(nu);
  QFamily f{nu, {}, {}};
  f.q.reserve(n_max + 1);
  f.q_star.reserve(n_max + 1);
  f.q.emplace_back(1);
  f.q_star.emplace_back();
  if (n_max >= 1) {
    f.q.push_back(RationalPoly({0, Rational(1, 2)}));
    f.q_star.emplace_back(1);
  }
  const RationalPoly x = RationalPoly::x();
  for (unsigned n = 1; n < n_max; ++n) {
    const Rational b = beta(nu, n);
    f.q.push_back(x * f.q[n] - b * f.q[n - 1]);
    f.q_star.push_back(x * f.q_star[n] - b * f.q_star[n - 1]);
  }
  return f;
}

/// Lommel polynomial R_{n,nu} as a polynomial in t = 1/x (coefficient i is
/// that of t^i), so evaluating the result at x gives R_{n,nu}(1/x).
/// Extended downward by R_{-1} = 0, R_{-2} = -1.
inline RationalPoly lommel_R(const Rational& nu, int n) {
  detail::require_admissible(nu);
  if (n < -2) throw Error(ErrorKind::InvalidArgument, "Lommel index below -2");
  if (n == -2) return RationalPoly(-1);
  if (n == -1) return RationalPoly();
  RationalPoly prev(1);
  if (n == 0) return prev;
  RationalPoly cur({0, 2 * nu});
  const RationalPoly t = RationalPoly::x();
  for (int k = 1; k < n; ++k) {
    RationalPoly next = t * cur * (2 * (nu + k)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// h_n(nu) = 2^n (nu)_n q_{n,nu}(1/nu) at a fixed rational nu, and the monic
/// integer polynomials H_n(nu) = nu^{n-1} h_n(nu).
class HSequence {
 public:
  HSequence(std::vector<Rational> h, std::vector<RationalPoly> big_h)
      : h_(std::move(h)), big_h_(std::move(big_h)) {}

  const std::vector<Rational>& h_values() const { return h_; }
  const std::vector<RationalPoly>& H_polys() const { return big_h_; }

  /// h_n(nu), n = 0..n_max.
  const Rational& h(unsigned n) const { return h_.at(n); }
  /// H_n, n = 1..n_max.
  const RationalPoly& H(unsigned n) const {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "H_n is defined for n >= 1");
    return big_h_.at(n - 1);
  }

 private:
  std::vector<Rational> h_;
  std::vector<RationalPoly> big_h_;
};

/// H_1 .. H_{n_max} from nu^2 H_n + H_{n+2} = 2 (nu+n+1) H_{n+1}.
inline std::vector<RationalPoly> build_H_polys(unsigned n_max) {
  std::vector<RationalPoly> out;
  if (n_max >= 1) out.emplace_back(1);
  if (n_max >= 2) out.push_back(RationalPoly({2, 1}));
  const RationalPoly nu_sq = RationalPoly::monomial(1, 2);
  for (unsigned n = 1; n + 2 <= n_max; ++n) {
    RationalPoly factor({Rational(2 * (n + 1)), 2});
    out.push_back(factor * out[n] - nu_sq * out[n - 1]);
  }
  return out;
}

/// h_0 .. h_{n_max} from h_{n-1} + h_{n+1} = 2 (nu+n)/nu h_n.
inline std::vector<Rational> build_h_values(const Rational& nu, unsigned n_max) {
  if (sgn(nu) == 0) throw Error(ErrorKind::ZeroNu, "h_n(nu) is undefined at nu = 0");
  std::vector<Rational> h(n_max + 1);
  h[0] = 1;
  if (n_max >= 1) h[1] = 1;
  for (unsigned n = 1; n < n_max; ++n) h[n + 1] = 2 * (nu + n) / nu * h[n] - h[n - 1];
  return h;
}

inline HSequence build_h(const Rational& nu, unsigned n_max) {
  return HSequence(build_h_values(nu, n_max), build_H_polys(n_max));
}

/// Monic orthogonal polynomials p_{n,nu} for the moments sigma'_nu(n+2),
/// with gamma_n from p_n = x p_{n-1} - gamma_n p_{n-2}; gamma[0] holds gamma_1.
struct PFamily {
  Rational nu;
  std::vector<RationalPoly> p;
  std::vector<Rational> gamma;

  unsigned n_max() const { return static_cast<unsigned>(p.size()) - 1; }
  const Rational& gamma_at(unsigned n) const { return gamma.at(n - 1); }
};

/// p_n = (2/q_n(1/nu)) [q_n(1/nu) q_{n+2}(x) - q_n(x) q_{n+2}(1/nu)] / (x^2 - nu^-2).
inline PFamily build_p_quotient(const Rational& nu, unsigned n_max) {
  detail::require_positive(nu);
  const QFamily qf = build_q(nu, n_max + 2);
  const Rational inv_nu = Rational(1) / nu;
  const RationalPoly divisor({-inv_nu * inv_nu, 0, 1});
  PFamily f{nu, {}, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational qn_at = qf.q[n](inv_nu);
    if (sgn(qn_at) == 0)
      throw Error(ErrorKind::QAtOneOverNuZero, "q_" + std::to_string(n) + "(1/nu) vanishes");
    const Rational qn2_at = qf.q[n + 2](inv_nu);
    RationalPoly numer = qf.q[n + 2] * qn_at - qf.q[n] * qn2_at;
    f.p.push_back(exact_div(numer, divisor) * (Rational(2) / qn_at));
  }
  const RationalPoly x = RationalPoly::x();
  for (unsigned n = 1; n <= n_max; ++n) {
    RationalPoly diff = x * f.p[n - 1] - f.p[n];
    f.gamma.push_back(n >= 2 ? diff.coeff(n - 2) : Rational(0));
  }
  if (n_max >= 1) f.gamma[0] = (nu + 2) / (2 * nu * (nu + 1));
  return f;
}

/// gamma_n through the h-values:
///   gamma_1 = (nu+2) / (2 nu (nu+1)),
///   gamma_n = h_{n+1} h_{n-2} / (4 (nu+n-1)(nu+n) h_n h_{n-1}),  n >= 2.
inline Rational gamma_coefficient(const Rational& nu, const std::vector<Rational>& h, unsigned n) {
  if (n == 1) return (nu + 2) / (2 * nu * (nu + 1));
  const Rational den = 4 * (nu + n - 1) * (nu + n) * h.at(n) * h.at(n - 1);
  if (sgn(den) == 0) throw Error(ErrorKind::QAtOneOverNuZero, "h_n(nu) vanishes in gamma_" + std::to_string(n));
  return h.at(n + 1) * h.at(n - 2) / den;
}

/// gamma_n evaluated literally from q_k(1/nu):
///   q_{n+1}(1/nu) q_{n-2}(1/nu) / (4 (nu+n-1)(nu+n-2) q_n(1/nu) q_{n-1}(1/nu)).
inline Rational gamma_from_q(const QFamily& qf, unsigned n) {
  const Rational& nu = qf.nu;
  if (n == 1) return (nu + 2) / (2 * nu * (nu + 1));
  const Rational inv_nu = Rational(1) / nu;
  const Rational den = 4 * (nu + n - 1) * (nu + n - 2) * qf.q.at(n)(inv_nu) * qf.q.at(n - 1)(inv_nu);
  if (sgn(den) == 0) throw Error(ErrorKind::QAtOneOverNuZero, "q_n(1/nu) vanishes in gamma_" + std::to_string(n));
  return qf.q.at(n + 1)(inv_nu) * qf.q.at(n - 2)(inv_nu) / den;
}

inline PFamily build_p_recurrence(const Rational& nu, unsigned n_max) {
  detail::require_positive(nu);
  const auto h = build_h_values(nu, n_max + 1);
  PFamily f{nu, {}, {}};
  f.p.emplace_back(1);
  if (n_max >= 1) f.p.push_back(RationalPoly::x());
  for (unsigned n = 1; n <= n_max; ++n) f.gamma.push_back(gamma_coefficient(nu, h, n));
  const RationalPoly x = RationalPoly::x();
  for (unsigned n = 2; n <= n_max; ++n) f.p.push_back(x * f.p[n - 1] - f.gamma[n - 1] * f.p[n - 2]);
  return f;
}

/// A node of the discrete orthogonality for q_n and its weight
/// rho(x) = lambda_{n-1} / (q_n'(x) q_{n-1}(x)).
struct WeightedNode {
  BigFloat root;
  BigFloat weight;
};

/// Roots of q_{n,nu} (increasing) with their rho weights. Roots are isolated
/// by Sturm bisection to `tol`, then polished with three Newton steps.
inline std::vector<WeightedNode> rho_weights(const Rational& nu, unsigned n, const BigFloat& tol,
                                             mpfr_prec_t bits = 256) {
  detail::require_positive(nu);
  std::vector<WeightedNode> out;
  if (n == 0) return out;
  const QFamily qf = build_q(nu, n);
  const RationalPoly& qn = qf.q[n];
  const RationalPoly dqn = qn.derivative();
  const RationalPoly& qn1 = qf.q[n - 1];
  const auto brackets = isolate_real_roots(qn, tol.to_rational());
  if (brackets.size() != n)
    throw Error(ErrorKind::RootIsolationFailure,
                "expected " + std::to_string(n) + " real roots, isolated " + std::to_string(brackets.size()));
  const BigFloat lam(lambda(nu, n - 1), bits);
  for (const auto& iv : brackets) {
    BigFloat x(iv.midpoint(), bits);
    for (int it = 0; it < 3; ++it) {
      BigFloat d = dqn.eval(x);
      if (d.is_zero()) break;
      x -= qn.eval(x) / d;
    }
    if (!(BigFloat(iv.lo, bits) <= x && x <= BigFloat(iv.hi, bits)))
      throw Error(ErrorKind::RootIsolationFailure, "Newton polish left its bracket");
    BigFloat w = lam / (dqn.eval(x) * qn1.eval(x));
    out.push_back({std::move(x), std::move(w)});
  }
  return out;
}

/// Left side minus right side of the Christoffel-Darboux identity
///   sum_{k<=n} eps_k q_k(x) q_k(y) / lambda_k
///     = [q_{n+1}(x) q_n(y) - q_{n+1}(y) q_n(x)] / (lambda_n (x - y)).
inline Rational cd_residual(const Rational& nu, unsigned n, const Rational& x, const Rational& y) {
  if (x == y) throw Error(ErrorKind::CoincidentPoints, "Christoffel-Darboux kernel needs x != y");
  const QFamily qf = build_q(nu, n + 1);
  Rational lhs = 0;
  for (unsigned k = 0; k <= n; ++k) lhs += epsilon(k) * qf.q[k](x) * qf.q[k](y) / lambda(nu, k);
  const Rational rhs =
      (qf.q[n + 1](x) * qf.q[n](y) - qf.q[n + 1](y) * qf.q[n](x)) / (lambda(nu, n) * (x - y));
  return lhs - rhs;
}

/// Confluent form: sum eps_k q_k(x)^2 / lambda_k
///   = [q'_{n+1}(x) q_n(x) - q_{n+1}(x) q'_n(x)] / lambda_n.
inline Rational cd_confluent_residual(const Rational& nu, unsigned n, const Rational& x) {
  const QFamily qf = build_q(nu, n + 1);
  Rational lhs = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Rational v = qf.q[k](x);
    lhs += epsilon(k) * v * v / lambda(nu, k);
  }
  const RationalPoly& a = qf.q[n + 1];
  const RationalPoly& b = qf.q[n];
  const Rational rhs = (a.derivative()(x) * b(x) - a(x) * b.derivative()(x)) / lambda(nu, n);
  return lhs - rhs;
}

}  // namespace jprime
