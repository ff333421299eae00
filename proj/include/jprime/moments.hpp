#pragma once

#include <cstddef>
#include <vector>

#include "jprime/bessel.hpp"
#include "jprime/determinant.hpp"
#include "jprime/errors.hpp"
#include "jprime/rational.hpp"

namespace jprime {

namespace detail {

inline void require_order(unsigned m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "Rayleigh sums are defined for m >= 2");
}

/// sigma'(1..n) from the Newton identities
///   sigma(n) = -n c_n - sum_{i=1}^{n-1} c_i sigma(n-i),
/// given the series coefficients c_0..c_n. Entry 0 is unused.
inline std::vector<Rational> power_sums(const std::vector<Rational>& c, unsigned n) {
  std::vector<Rational> sigma(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    Rational s = -Rational(k) * c[k];
    for (unsigned i = 2; i < k; i += 2) {  // odd c_i vanish
      if (sgn(c[i]) != 0) s -= c[i] * sigma[k - i];
    }
    sigma[k] = s;
  }
  return sigma;
}

}  // namespace detail

/// sigma'_nu(m): sum over all nonzero zeros j of J'_nu of j^{-m}, as an exact
/// rational function value. Odd m gives 0. Negative noninteger nu is allowed
/// (analytic continuation in nu).
inline Rational rayleigh_sum(const Rational& nu, unsigned m) {
  detail::require_order(m);
  auto c = series_coeffs(nu, m);
  if (m % 2 == 1) return 0;
  return detail::power_sums(c, m)[m];
}

/// The same quantity computed literally as (-1)^m times the m x m almost
/// lower-triangular determinant with first column (i c_i) and Toeplitz
/// entries c_{i-j+1}.
inline Rational rayleigh_via_determinant(const Rational& nu, unsigned m) {
  detail::require_order(m);
  auto c = series_coeffs(nu, m);
  RationalMatrix a(m, std::vector<Rational>(m));
  for (unsigned i = 1; i <= m; ++i) {
    a[i - 1][0] = Rational(i) * c[i];
    for (unsigned j = 2; j <= m; ++j) {
      long idx = static_cast<long>(i) - static_cast<long>(j) + 1;
      if (idx >= 0) a[i - 1][j - 1] = c[static_cast<std::size_t>(idx)];
    }
  }
  Rational det = bareiss_determinant(a);
  return m % 2 == 0 ? det : Rational(-det);
}

/// S'_{2n,nu} = sum_k 1 / (j_k^{2n} (j_k^2 - nu^2)) over positive zeros,
/// from S'_0 = 1/(2 nu) and sigma'(2n) = 2 S'_{2n-2} - 2 nu^2 S'_{2n}.
inline Rational s_prime(const Rational& nu, unsigned n) {
  if (sgn(nu) <= 0) throw Error(ErrorKind::NonpositiveNu, "s_prime requires nu > 0");
  Rational s = Rational(1) / (2 * nu);
  if (n == 0) return s;
  auto c = series_coeffs(nu, 2 * n);
  auto sigma = detail::power_sums(c, 2 * n);
  const Rational two_nu_sq = 2 * nu * nu;
  for (unsigned k = 1; k <= n; ++k) s = (2 * s - sigma[2 * k]) / two_nu_sq;
  return s;
}

/// mu_n = sigma'_nu(n+2) for n = 0..max_order; the moments of the
/// functional whose orthogonal polynomials are p_{n,nu}.
class MomentTable {
 public:
  MomentTable(const Rational& nu, unsigned max_order) : nu_(nu) {
    auto c = series_coeffs(nu, max_order + 2);
    auto sigma = detail::power_sums(c, max_order + 2);
    moments_.assign(sigma.begin() + 2, sigma.end());
  }

  const Rational& nu() const { return nu_; }
  const std::vector<Rational>& moments() const { return moments_; }
  unsigned max_order() const { return static_cast<unsigned>(moments_.size()) - 1; }
  const Rational& operator[](std::size_t n) const { return moments_.at(n); }

 private:
  Rational nu_;
  std::vector<Rational> moments_;
};

inline MomentTable moment_table(const Rational& nu, unsigned max_order) { return MomentTable(nu, max_order); }

}  // namespace jprime
