#include <gtest/gtest.h>

#include "jprime/jprime.hpp"
#include "oracles.hpp"

using namespace jprime;

TEST(RayleighSum, LowOrdersAtOne) {
  EXPECT_EQ(rayleigh_sum(1, 2), Rational(3, 4));
  EXPECT_EQ(rayleigh_sum(1, 4), Rational(17, 96));
  EXPECT_EQ(rayleigh_sum(1, 6), Rational(79, 1536));
  EXPECT_EQ(rayleigh_sum(1, 5), Rational(0));
}

TEST(RayleighSum, ClosedFormsAcrossOrders) {
  for (Rational nu : {Rational(1, 2), Rational(3, 2), Rational(7, 3), Rational(-1, 2), Rational(-5, 4)}) {
    EXPECT_EQ(rayleigh_sum(nu, 2), oracle::sigma2(nu));
    EXPECT_EQ(rayleigh_sum(nu, 4), oracle::sigma4(nu));
    EXPECT_EQ(rayleigh_sum(nu, 6), oracle::sigma6(nu));
  }
}

TEST(RayleighSum, DeterminantRouteAgrees) {
  for (Rational nu : {Rational(1, 3), Rational(2), Rational(-7, 5)})
    for (unsigned m = 2; m <= 12; ++m) EXPECT_EQ(rayleigh_sum(nu, m), rayleigh_via_determinant(nu, m)) << m;
}

TEST(RayleighSum, NumericalSumOverZeros) {
  // sigma'(4) at nu = 3 from the first 400 zeros; the tail is O(K^-3).
  const mpfr_prec_t bits = 128;
  auto z = find_real_zeros(BigFloat(3L, bits), 400, BigFloat(std::string("1e-25"), bits));
  BigFloat s(0L, bits);
  for (const auto& j : z) {
    BigFloat j2 = j * j;
    s += BigFloat(2L, bits) / (j2 * j2);
  }
  EXPECT_NEAR(s.to_double(), rayleigh_sum(3, 4).get_d(), 1e-8);
}

TEST(RayleighSum, DomainErrors) {
  EXPECT_THROW(rayleigh_sum(1, 1), Error);
  try {
    rayleigh_sum(-3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonpositiveIntegerNu);
  }
}

TEST(SPrime, StartsAtOneOverTwoNu) {
  EXPECT_EQ(s_prime(1, 0), Rational(1, 2));
  EXPECT_EQ(s_prime(Rational(5, 2), 0), Rational(1, 5));
}

TEST(SPrime, CorrectedSixthOrderFormula) {
  for (Rational nu : {Rational(1), Rational(1, 2), Rational(9, 4)}) {
    Rational nu4 = nu * nu * nu * nu;
    Rational expected = (5 * nu + 6) / (32 * nu4 * (nu + 1) * (nu + 1) * (nu + 1) * (nu + 3));
    EXPECT_EQ(s_prime(nu, 3), expected);
  }
  EXPECT_EQ(s_prime(1, 3), Rational(11, 1024));
}

TEST(SPrime, SatisfiesTheDefiningRecursion) {
  Rational nu(7, 2);
  for (unsigned n = 1; n <= 6; ++n)
    EXPECT_EQ(rayleigh_sum(nu, 2 * n), 2 * s_prime(nu, n - 1) - 2 * nu * nu * s_prime(nu, n));
  EXPECT_THROW(s_prime(0, 1), Error);
  EXPECT_THROW(s_prime(Rational(-1, 2), 1), Error);
}

TEST(MomentTable, HoldsShiftedSums) {
  auto t = moment_table(1, 4);
  EXPECT_EQ(t.max_order(), 4u);
  EXPECT_EQ(t[0], Rational(3, 4));
  EXPECT_EQ(t[1], Rational(0));
  EXPECT_EQ(t[2], Rational(17, 96));
  EXPECT_EQ(t[4], Rational(79, 1536));
  EXPECT_EQ(t.nu(), Rational(1));
}
