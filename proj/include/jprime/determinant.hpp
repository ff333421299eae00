#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jprime/errors.hpp"
#include "jprime/rational.hpp"

namespace jprime {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant by fraction-free (Bareiss) elimination. Rows are scaled to
/// integers first; every intermediate division is exact in Z.
inline Rational bareiss_determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (const auto& v : m[i]) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), v.get_den_mpz_t());
    scale *= row_lcm;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (row_lcm / m[i][j].get_den());
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

}  // namespace jprime
