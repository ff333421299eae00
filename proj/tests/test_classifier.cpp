#include <gtest/gtest.h>

#include <random>
#include <string>

#include "jprime/jprime.hpp"
#include "oracles.hpp"

using namespace jprime;

namespace {

BigFloat bf(const char* s, mpfr_prec_t bits = 128) { return BigFloat(std::string(s), bits); }

const Rational& nu_1() {
  static const Rational v = find_nu_k(1, bf("1e-30")).value.to_rational();
  return v;
}

const Rational& nu_2() {
  static const Rational v = find_nu_k(2, bf("1e-30")).value.to_rational();
  return v;
}

}  // namespace

TEST(Hankel, SmallValuesAtOne) {
  EXPECT_EQ(hankel_delta(1, 0), Rational(3, 4));
  EXPECT_EQ(hankel_delta_direct(1, 0), Rational(3, 4));
  EXPECT_EQ(hankel_delta(1, 1), Rational(17, 128));
  EXPECT_EQ(hankel_delta_direct(1, 1), Rational(17, 128));
  // mu_0 mu_2 - mu_1^2
  EXPECT_EQ(hankel_delta(1, 1), Rational(3, 4) * Rational(17, 96));
}

TEST(Hankel, ClosedFormMatchesDirect) {
  for (Rational nu : {Rational(1, 2), Rational(5, 2), Rational(-4, 3)})
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(hankel_delta(nu, n), hankel_delta_direct(nu, n)) << nu << " " << n;
}

TEST(Hankel, DirectMatchesCofactorExpansion) {
  Rational nu(-9, 4);
  MomentTable mu(nu, 8);
  for (unsigned n = 0; n <= 4; ++n) {
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= n; ++j) m[i][j] = mu[i + j];
    EXPECT_EQ(hankel_delta_direct(nu, n), oracle::cofactor_det(m));
  }
}

TEST(Hankel, PositiveForPositiveOrder) {
  for (unsigned n = 0; n <= 6; ++n) EXPECT_GT(hankel_delta_direct(2, n), 0);
}

TEST(Hankel, RejectsNonpositiveIntegers) {
  for (int nu : {0, -1, -4}) {
    try {
      hankel_delta(nu, 2);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonpositiveIntegerNu);
    }
  }
}

TEST(LambdaSequence, SignsAndValues) {
  auto r = lambda_sequence(Rational(-1, 2), 4, true);
  EXPECT_EQ(r.rows[0].lambda, Rational(-3));
  EXPECT_EQ(r.rows[0].lambda_sign, -1);
  for (const auto& row : r.rows) EXPECT_EQ(*row.delta_direct, row.delta_closed);
  auto pos = lambda_sequence(1, 10);
  for (const auto& row : pos.rows) EXPECT_EQ(row.lambda_sign, 1);
}

TEST(LambdaSequence, OnlyIntegerOrdersHitHZeros) {
  // H_n is monic with integer coefficients, so its rational roots are
  // integers; the only one found is nu = -2 for H_2.
  auto H = build_H_polys(14);
  for (unsigned n = 2; n <= 14; ++n)
    for (int v = -2 * static_cast<int>(n); v < 0; ++v)
      EXPECT_EQ(sgn(H[n - 1](Rational(v))) == 0, n == 2 && v == -2) << n << " " << v;
  try {
    lambda_sequence(-2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonpositiveIntegerNu);
  }
}

TEST(CountNegatives, BasicCases) {
  EXPECT_EQ(count_negatives(Rational(-1, 2), 10), 1u);
  EXPECT_EQ(count_negatives(Rational(3, 2), 10), 0u);
  unsigned expected = Rational(-7, 4) > nu_1() ? 0u : 2u;
  EXPECT_EQ(count_negatives(Rational(-7, 4), 10), expected);
}

TEST(CountNegatives, AgreesWithTheFullLambdaRows) {
  Rational nu(-23, 7);
  auto r = lambda_sequence(nu, 60);
  unsigned neg = 0;
  for (const auto& row : r.rows) neg += row.lambda_sign < 0;
  EXPECT_EQ(count_negatives(nu, 10), neg);
}

TEST(FindNuK, BracketsAndResidual) {
  for (unsigned k = 1; k <= 4; ++k) {
    auto e = find_nu_k(k, bf("1e-30"));
    EXPECT_GT(e.value, BigFloat(Rational(-2 * static_cast<long>(k) - 1, 2), 128));
    EXPECT_LT(e.value, BigFloat(-static_cast<long>(k), 128));
    EXPECT_LT(e.residual.to_double(), 1e-20);
  }
  EXPECT_NEAR(nu_1().get_d(), -1.1171230773903, 1e-12);
}

TEST(FindNuK, HRootsApproachFromBelow) {
  // mu_{n,1}, the largest root of H_n, increases toward nu_1.
  // The gap shrinks very fast (about 1e-60 at n = 24), hence the digits.
  const Rational nu1 = find_nu_k(1, bf("1e-100", 512)).value.to_rational();
  Rational prev = -2;
  for (unsigned n : {3u, 6u, 12u, 24u}) {
    RationalPoly H = build_H_polys(n)[n - 1];
    auto iv = isolate_real_roots(H, Rational(1, Integer("1" + std::string(110, '0'))));
    Rational top = iv.back().hi;
    EXPECT_LT(top, nu1);
    EXPECT_GT(iv.back().lo, prev);
    prev = iv.back().lo;
  }
}

TEST(Classify, ClosedFormCases) {
  auto c = classify(Rational(-1, 2));
  EXPECT_EQ(c.complex_count, 2u);
  EXPECT_TRUE(c.imaginary_pair);
  EXPECT_EQ(c.case_label, ZeroCase::Minus1To0);
  EXPECT_EQ(c.counted_negatives.value_or(99), 1u);

  auto ints = classify(Rational(-3));
  EXPECT_EQ(ints.complex_count, 0u);
  EXPECT_EQ(ints.case_label, ZeroCase::PositiveOrInteger);

  EXPECT_EQ(classify(Rational(5, 2)).complex_count, 0u);
  EXPECT_EQ(classify(Rational(0)).complex_count, 0u);
}

TEST(Classify, BothSidesOfNuOneAndNuTwo) {
  const Rational eps(1, 10000);
  auto right1 = classify(Rational(nu_1() + eps));
  EXPECT_EQ(right1.complex_count, 0u);
  EXPECT_EQ(right1.case_label, ZeroCase::KBandRight);
  EXPECT_FALSE(right1.imaginary_pair);
  auto left1 = classify(Rational(nu_1() - eps));
  EXPECT_EQ(left1.complex_count, 4u);
  EXPECT_EQ(left1.case_label, ZeroCase::KBandLeft);

  auto left2 = classify(Rational(nu_2() - eps));
  EXPECT_EQ(left2.complex_count, 6u);
  EXPECT_TRUE(left2.imaginary_pair);
  auto right2 = classify(Rational(nu_2() + eps));
  EXPECT_EQ(right2.complex_count, 2u);
  EXPECT_TRUE(right2.imaginary_pair);
}

TEST(Classify, NineEighthsFollowsTheSideOfNuOne) {
  auto c = classify(Rational(-9, 8));
  EXPECT_EQ(c.complex_count, Rational(-9, 8) >= nu_1() ? 0u : 4u);
}

TEST(Classify, FloatInputMatchesRationalInput) {
  for (const char* s : {"-0.25", "-1.5", "-2.125", "-5.0625", "3.5"}) {
    BigFloat v = bf(s, 256);
    auto a = classify(v);
    auto b = classify(v.to_rational());
    EXPECT_EQ(a.complex_count, b.complex_count) << s;
    EXPECT_EQ(a.imaginary_pair, b.imaginary_pair) << s;
    EXPECT_FALSE(a.counted_negatives.has_value());
  }
}

TEST(Classify, ParityAndCountingAgreeOnRandomOrders) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 30; ++t) {
    Rational nu = oracle::random_rational(rng, -6, 0);
    if (is_integer(nu)) continue;
    auto c = classify(nu);
    EXPECT_EQ(c.complex_count % 2, 0u);
    unsigned k = static_cast<unsigned>(floor(Rational(-nu)).get_ui());
    EXPECT_EQ(c.imaginary_pair, k % 2 == 0) << nu;
    ASSERT_TRUE(c.counted_negatives.has_value()) << nu;
    EXPECT_EQ(2 * *c.counted_negatives, c.complex_count) << nu;
  }
}

TEST(Classify, NonrealRootsOfReversedQApproachTheCount) {
  // Roots of q_n are near reciprocals of zeros of J'_nu; spurious roots near
  // the origin of q_n reversed are excluded by the real-root count below.
  for (Rational nu : {Rational(-1, 2), Rational(-5, 2), Rational(-9, 8)}) {
    auto c = classify(nu);
    std::vector<std::size_t> counts;
    for (unsigned n : {40u, 60u, 80u}) {
      auto f = build_q(nu, n);
      counts.push_back(count_nonreal_roots(f.q[n].reversed()));
    }
    EXPECT_EQ(counts[0], counts[1]) << nu;
    EXPECT_EQ(counts[1], counts[2]) << nu;
    EXPECT_EQ(counts[2], c.complex_count) << nu;
  }
}
